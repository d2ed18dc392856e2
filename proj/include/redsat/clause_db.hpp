#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "redsat/levels.hpp"
#include "redsat/strategies.hpp"
#include "redsat/types.hpp"

namespace redsat {

using ClauseRef = uint32_t;
inline constexpr ClauseRef kNoClause = 0xFFFFFFFFu;

struct Clause {
    std::vector<Lit> lits;

    // learned-clause bookkeeping
    double activity = 0.0;
    uint64_t birth = 0;  // conflict index when learned
    uint64_t uid = 0;    // never reused, unlike ClauseRef slots
    int32_t lbd = 0;     // at learning time; dynamic kinds may lower it
    bool learnt = false;
    bool protected_this_round = false;  // survived the deletion zone of the last reduce

    int size() const { return static_cast<int>(lits.size()); }
    Lit& operator[](int i) { return lits[i]; }
    Lit operator[](int i) const { return lits[i]; }
    std::span<const Lit> span() const { return lits; }
};

enum class Schedule { Minisat, Glucose };

const char* to_string(Schedule s);
std::optional<Schedule> schedule_from_string(std::string_view name);

struct DbConfig {
    Schedule schedule = Schedule::Minisat;
    // MiniSAT 2.2: max_learnts = num_clauses * learntsize_factor, grown by
    // learntsize_inc once per adjust interval; the interval starts at
    // adjust_start conflicts and is multiplied by adjust_inc each time.
    double learntsize_factor = 1.0 / 3.0;
    double learntsize_inc = 1.1;
    int adjust_start = 100;
    double adjust_inc = 1.5;
    // Glucose 3.0: reduce every glucose_first + glucose_inc * reductions
    // conflicts.
    int glucose_first = 2000;
    int glucose_inc = 300;
};

// Learned-clause store. Original clauses live in the same arena but are never
// reduced. Activity values flow exclusively through the attached Strategy,
// under the convention that smaller activity is more relevant.
class ClauseDb {
  public:
    // Observer for learning, activity and deletion events (used by tests and
    // instrumentation; DRAT logging goes through the solver instead).
    struct Listener {
        virtual void on_learned(const Clause& c, std::span<const int32_t> lit_levels, int conflict_level) {
            (void)c, (void)lit_levels, (void)conflict_level;
        }
        virtual void on_activity(const Clause& c, double old_activity) { (void)c, (void)old_activity; }
        virtual void on_deleted(const Clause& c) { (void)c; }
        virtual ~Listener() = default;
    };

    ClauseDb(const DbConfig& config, Strategy& strategy);

    void set_listener(Listener* l) { listener_ = l; }

    // Schedule state depends on the original clause count; call once before
    // solving.
    void init_schedule(size_t num_original_clauses);

    ClauseRef add_original(std::vector<Lit> lits);

    // Stores a learned clause (size >= 2) with activity, LBD and birth
    // recorded. `levels` must cover all literals; `conflict_level` is the
    // decision level of the conflict that produced it.
    ClauseRef add_learned(std::vector<Lit> lits, const LevelView& levels, int conflict_level,
                          uint64_t conflict_index);

    Clause& clause(ClauseRef ref) { return arena_[ref]; }
    const Clause& clause(ClauseRef ref) const { return arena_[ref]; }

    size_t learned_count() const { return learned_.size(); }
    std::span<const ClauseRef> learned() const { return learned_; }

    // Bookkeeping the MiniSAT schedule does once per conflict.
    void on_conflict();

    bool should_reduce(size_t num_assigned, uint64_t conflicts) const;

    // Deletes the less relevant half of the learned clauses: sorted by
    // activity descending (ties: older first), the first half goes, except
    // locked and binary clauses. `on_delete` runs before each clause is
    // freed (watch detach, DRAT). Returns the number deleted.
    size_t reduce(const std::function<bool(ClauseRef)>& locked,
                  const std::function<void(ClauseRef, const Clause&)>& on_delete);

    // Strategy hooks, forwarded with the clause's stored activity. Fire the
    // listener when the activity changes.
    void on_reason_used(ClauseRef ref, int level, const LevelView& levels);
    void on_conflict_analysis(ClauseRef ref, int conflict_level, const LevelView& levels);

    double max_learnts() const { return max_learnts_; }
    uint64_t reductions() const { return reductions_; }

  private:
    void apply_activity(ClauseRef ref, double fresh);

    DbConfig config_;
    Strategy& strategy_;
    Listener* listener_ = nullptr;

    std::vector<Clause> arena_;
    std::vector<ClauseRef> free_slots_;
    std::vector<ClauseRef> learned_;
    uint64_t next_uid_ = 0;
    uint64_t reductions_ = 0;

    // MiniSAT schedule state
    double max_learnts_ = 0;
    double adjust_confl_ = 0;
    int adjust_cnt_ = 0;
    // Glucose schedule state
    uint64_t next_reduce_at_ = 0;
};

}  // namespace redsat
