#pragma once

#include <cstdint>
#include <vector>

#include "redsat/dimacs.hpp"

namespace redsat {
namespace oracle {

// Enumeration bound: 26 variables is ~6.7e7 assignments worst case.
inline constexpr int kMaxBruteforceVars = 26;

struct OracleResult {
    bool sat = false;
    std::vector<bool> witness;  // complete assignment when sat
};

// Exhaustive enumeration with early clause-falsification pruning. Exact on
// its domain; shares no propagation code with the CDCL engine. Throws
// std::invalid_argument above the enumeration bound.
OracleResult solve_bruteforce(const Instance& inst);

// True iff every clause contains a satisfied literal. The model must assign
// every variable.
bool check_model(const Instance& inst, const std::vector<bool>& model);

// Uniform random 3-CNF: each clause has 3 distinct variables, each polarity a
// fair coin. Deterministic per seed. Requires n >= 3.
Instance gen_random_3cnf(int num_vars, int num_clauses, uint32_t seed);

}  // namespace oracle
}  // namespace redsat
