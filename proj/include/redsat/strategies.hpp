#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "redsat/levels.hpp"
#include "redsat/prng.hpp"
#include "redsat/types.hpp"

namespace redsat {

// Activity measures for learned clauses. Throughout, smaller activity means
// more relevant: reduction deletes from the large-activity end.
enum class StrategyKind {
    Size,           // A(c) = |c|, static
    Rand,           // A(c) = drand(), static
    Fifo,           // A(c) = -birth, static (oldest deleted first)
    Sbr,            // A(c) = |c| if |c| <= k, else k + drand(), static
    SizeD,          // A(c) = |c|, then min with the propagation level
    SizeKD,         // A(c) = |c| if |c| <= k else k+|c|, then min with k+d
    RelD,           // A(c) = sum of literal assignment levels, min over re-evaluations
    LbdStatic,      // A(c) = LBD at learning time, static
    LbdDynamic,     // A(c) = LBD, re-evaluated when used in conflict analysis
    GlucoseSizeKD,  // A(c) = |c| if |c| < k else k+|c|, min with k+d at conflicts
    GlucoseSbr,     // A(c) = |c| if |c| <= k, else k + irand(num_vars), static
};

struct StrategyConfig {
    StrategyKind kind = StrategyKind::Sbr;
    int k = 0;  // threshold; 0 means the per-kind default
    uint32_t seed = MiniSatRng::kDefaultSeed;
};

const char* to_string(StrategyKind kind);
std::optional<StrategyKind> strategy_from_string(std::string_view name);

bool uses_k(StrategyKind kind);
int default_k(StrategyKind kind);  // 12 for sbr/sizekd/glucose-sizekd, 15 for glucose-sbr
bool is_dynamic(StrategyKind kind);

// Does the kind update activities from conflict analysis (as opposed to
// reason-use during propagation)?
bool updates_on_analysis(StrategyKind kind);

// One strategy instance per solver. Owns the solver's PRNG stream so
// randomized activities are consumed in clause-birth order.
class Strategy {
  public:
    Strategy(const StrategyConfig& config, int num_vars);

    StrategyKind kind() const { return kind_; }
    int k() const { return k_; }
    bool is_dynamic() const { return redsat::is_dynamic(kind_); }

    // Activity of a freshly learned clause. `levels` must cover every literal
    // (all are assigned at learning time); `birth` is the conflict index.
    double initial_activity(std::span<const Lit> clause, const LevelView& levels, uint64_t birth);

    // The clause propagated a literal at decision level d. Returns the new
    // activity (== current when the kind does not update here).
    double on_reason_used(double current, std::span<const Lit> clause, int d, const LevelView& levels);

    // The clause was resolved during the analysis of a conflict at decision
    // level d. Returns the new activity.
    double on_conflict_analysis(double current, std::span<const Lit> clause, int d, const LevelView& levels);

    MiniSatRng& rng() { return rng_; }

  private:
    StrategyKind kind_;
    int k_;
    int num_vars_;
    MiniSatRng rng_;
};

}  // namespace redsat
