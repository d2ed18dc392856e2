#pragma once

#include <ostream>
#include <span>

#include "redsat/types.hpp"

namespace redsat {

// Streams a DRAT proof in the plain-text format: one line per learned clause,
// "d"-prefixed lines for deletions, and a final "0" line (the empty clause)
// on UNSAT.
class DratWriter {
  public:
    explicit DratWriter(std::ostream& out) : out_(out) {}

    void add(std::span<const Lit> lits) { line(nullptr, lits); }
    void del(std::span<const Lit> lits) { line("d ", lits); }
    void add_empty() { out_ << "0\n"; }
    void flush() { out_.flush(); }

  private:
    void line(const char* prefix, std::span<const Lit> lits) {
        if (prefix) out_ << prefix;
        for (Lit l : lits) out_ << l.to_dimacs() << ' ';
        out_ << "0\n";
    }

    std::ostream& out_;
};

}  // namespace redsat
