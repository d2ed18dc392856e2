#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "redsat/types.hpp"

namespace redsat {

// Read-only view of per-variable decision levels, as recorded on the trail.
// Every literal queried must belong to an assigned variable.
struct LevelView {
    std::span<const int32_t> level_of;

    int lev(Lit l) const {
        assert(l.var() >= 0 && static_cast<size_t>(l.var()) < level_of.size());
        return level_of[l.var()];
    }
};

// Projection of a clause onto decision levels: level -> number of literals
// assigned at that level. The counts sum to the clause size.
inline std::map<int, int> level_blocks(std::span<const Lit> clause, const LevelView& levels) {
    std::map<int, int> blocks;
    for (Lit l : clause) ++blocks[levels.lev(l)];
    return blocks;
}

// Number of distinct decision levels among the clause's literals.
inline int compute_lbd(std::span<const Lit> clause, const LevelView& levels) {
    thread_local std::vector<int32_t> seen;
    seen.clear();
    for (Lit l : clause) seen.push_back(levels.lev(l));
    std::sort(seen.begin(), seen.end());
    return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

}  // namespace redsat
