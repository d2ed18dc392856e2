#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "redsat/types.hpp"

namespace redsat {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parsed CNF formula. Clauses are normalized: no duplicate literals, no
// tautologies. Variables never mentioned in a clause still count toward
// num_vars.
struct Instance {
    int num_vars = 0;
    std::vector<std::vector<Lit>> clauses;  // each nonempty, normalized
    int empty_clauses = 0;                  // distinct UNSAT signal, kept out of `clauses`

    int tautologies_dropped = 0;
    std::vector<std::string> warnings;

    bool operator==(const Instance& o) const {
        return num_vars == o.num_vars && clauses == o.clauses && empty_clauses == o.empty_clauses;
    }
};

// Removes duplicate literals preserving first occurrence. Returns nullopt if
// the clause contains a complementary pair (tautology). Throws
// std::invalid_argument on empty input.
std::optional<std::vector<Lit>> normalize_clause(const std::vector<Lit>& lits);

// Parses a DIMACS CNF document: optional 'c' comment lines, a "p cnf V C"
// header, then 0-terminated clauses (which may span lines). A line starting
// with '%' ends the input (SATLIB convention). A clause-count mismatch with
// the header is recorded as a warning, not an error.
Instance parse_dimacs(std::istream& in);
Instance parse_dimacs_file(const std::string& path);

void write_dimacs(const Instance& inst, std::ostream& out);

}  // namespace redsat
