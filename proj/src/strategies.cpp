#include "redsat/strategies.hpp"

#include <algorithm>

namespace redsat {

const char* to_string(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::Size: return "size";
        case StrategyKind::Rand: return "rand";
        case StrategyKind::Fifo: return "fifo";
        case StrategyKind::Sbr: return "sbr";
        case StrategyKind::SizeD: return "sized";
        case StrategyKind::SizeKD: return "sizekd";
        case StrategyKind::RelD: return "reld";
        case StrategyKind::LbdStatic: return "lbd";
        case StrategyKind::LbdDynamic: return "lbdd";
        case StrategyKind::GlucoseSizeKD: return "glucose-sizekd";
        case StrategyKind::GlucoseSbr: return "glucose-sbr";
    }
    return "?";
}

std::optional<StrategyKind> strategy_from_string(std::string_view name) {
    for (StrategyKind kind :
         {StrategyKind::Size, StrategyKind::Rand, StrategyKind::Fifo, StrategyKind::Sbr, StrategyKind::SizeD,
          StrategyKind::SizeKD, StrategyKind::RelD, StrategyKind::LbdStatic, StrategyKind::LbdDynamic,
          StrategyKind::GlucoseSizeKD, StrategyKind::GlucoseSbr}) {
        if (name == to_string(kind)) return kind;
    }
    return std::nullopt;
}

bool uses_k(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::Sbr:
        case StrategyKind::SizeKD:
        case StrategyKind::GlucoseSizeKD:
        case StrategyKind::GlucoseSbr: return true;
        default: return false;
    }
}

int default_k(StrategyKind kind) {
    return kind == StrategyKind::GlucoseSbr ? 15 : 12;
}

bool is_dynamic(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::SizeD:
        case StrategyKind::SizeKD:
        case StrategyKind::RelD:
        case StrategyKind::LbdDynamic:
        case StrategyKind::GlucoseSizeKD: return true;
        default: return false;
    }
}

bool updates_on_analysis(StrategyKind kind) {
    return kind == StrategyKind::LbdDynamic || kind == StrategyKind::GlucoseSizeKD;
}

namespace {

// Sum over levels i of i * |c^i|: every literal assigned at level i
// contributes i, so this is just the sum of assignment levels.
double block_weighted_sum(std::span<const Lit> clause, const LevelView& levels) {
    double sum = 0;
    for (Lit l : clause) sum += levels.lev(l);
    return sum;
}

}  // namespace

Strategy::Strategy(const StrategyConfig& config, int num_vars)
    : kind_(config.kind),
      k_(config.k > 0 ? config.k : default_k(config.kind)),
      num_vars_(num_vars),
      rng_(config.seed) {}

double Strategy::initial_activity(std::span<const Lit> clause, const LevelView& levels, uint64_t birth) {
    const double size = static_cast<double>(clause.size());
    switch (kind_) {
        case StrategyKind::Size:
        case StrategyKind::SizeD: return size;
        case StrategyKind::Rand: return rng_.drand();
        case StrategyKind::Fifo: return -static_cast<double>(birth);
        case StrategyKind::Sbr: return size <= k_ ? size : k_ + rng_.drand();
        case StrategyKind::SizeKD: return size <= k_ ? size : k_ + size;
        case StrategyKind::RelD: return block_weighted_sum(clause, levels);
        case StrategyKind::LbdStatic:
        case StrategyKind::LbdDynamic: return compute_lbd(clause, levels);
        case StrategyKind::GlucoseSizeKD: return size < k_ ? size : k_ + size;  // strict bound for this kind
        case StrategyKind::GlucoseSbr: return size <= k_ ? size : k_ + rng_.irand(num_vars_);
    }
    return size;
}

double Strategy::on_reason_used(double current, std::span<const Lit> clause, int d, const LevelView& levels) {
    switch (kind_) {
        case StrategyKind::SizeD: return std::min(current, static_cast<double>(d));
        case StrategyKind::SizeKD: {
            double candidate = static_cast<double>(k_) + d;
            return candidate < current ? candidate : current;
        }
        case StrategyKind::RelD: {
            double fresh = block_weighted_sum(clause, levels);
            return fresh < current ? fresh : current;
        }
        default: return current;
    }
}

double Strategy::on_conflict_analysis(double current, std::span<const Lit> clause, int d, const LevelView& levels) {
    switch (kind_) {
        case StrategyKind::LbdDynamic: return std::min(current, static_cast<double>(compute_lbd(clause, levels)));
        case StrategyKind::GlucoseSizeKD: {
            double candidate = static_cast<double>(k_) + d;
            return candidate < current ? candidate : current;
        }
        default: return current;
    }
}

}  // namespace redsat
