#include "redsat/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace redsat {

std::optional<std::vector<Lit>> normalize_clause(const std::vector<Lit>& lits) {
    if (lits.empty()) throw std::invalid_argument("normalize_clause: empty clause");
    std::vector<Lit> out;
    out.reserve(lits.size());
    for (Lit l : lits) {
        bool dup = false;
        for (Lit m : out) {
            if (m == l) {
                dup = true;
                break;
            }
            if (m == ~l) return std::nullopt;  // tautology
        }
        if (!dup) out.push_back(l);
    }
    return out;
}

namespace {

bool parse_int(std::string_view tok, long& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

Instance parse_dimacs(std::istream& in) {
    Instance inst;
    bool have_header = false;
    long declared_clauses = 0;
    std::vector<Lit> current;

    std::string line;
    size_t lineno = 0;
    bool stopped = false;
    while (!stopped && std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        char first = line[pos];
        if (first == 'c') continue;
        if (first == '%') break;  // SATLIB terminator
        if (first == 'p') {
            if (have_header) throw ParseError("line " + std::to_string(lineno) + ": duplicate header");
            std::istringstream hs(line.substr(pos + 1));
            std::string fmt;
            long nv = -1, nc = -1;
            hs >> fmt >> nv >> nc;
            if (hs.fail() || fmt != "cnf" || nv < 0 || nc < 0)
                throw ParseError("line " + std::to_string(lineno) + ": malformed header (expected 'p cnf <vars> <clauses>')");
            inst.num_vars = static_cast<int>(nv);
            declared_clauses = nc;
            have_header = true;
            continue;
        }

        std::istringstream ls(line.substr(pos));
        std::string tok;
        while (ls >> tok) {
            if (tok[0] == 'c') {  // trailing comment on a clause line
                ls.ignore(std::numeric_limits<std::streamsize>::max());
                break;
            }
            long v;
            if (!parse_int(tok, v))
                throw ParseError("line " + std::to_string(lineno) + ": unexpected token '" + tok + "'");
            if (!have_header)
                throw ParseError("line " + std::to_string(lineno) + ": clause before 'p cnf' header");
            if (v == 0) {
                if (current.empty()) {
                    ++inst.empty_clauses;
                } else if (auto norm = normalize_clause(current)) {
                    inst.clauses.push_back(std::move(*norm));
                } else {
                    ++inst.tautologies_dropped;
                }
                current.clear();
            } else {
                if (std::abs(v) > inst.num_vars)
                    throw ParseError("line " + std::to_string(lineno) + ": literal " + std::to_string(v) +
                                     " out of declared range (" + std::to_string(inst.num_vars) + " vars)");
                current.push_back(Lit::from_dimacs(static_cast<int>(v)));
            }
        }
    }

    if (!have_header) throw ParseError("missing 'p cnf' header");
    if (!current.empty()) throw ParseError("unterminated final clause (missing 0)");
    long seen = static_cast<long>(inst.clauses.size()) + inst.empty_clauses + inst.tautologies_dropped;
    if (seen != declared_clauses)
        inst.warnings.push_back("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                std::to_string(seen));
    return inst;
}

Instance parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_dimacs(in);
}

void write_dimacs(const Instance& inst, std::ostream& out) {
    out << "p cnf " << inst.num_vars << ' ' << (inst.clauses.size() + inst.empty_clauses) << '\n';
    for (const auto& c : inst.clauses) {
        for (Lit l : c) out << l.to_dimacs() << ' ';
        out << "0\n";
    }
    for (int i = 0; i < inst.empty_clauses; ++i) out << "0\n";
}

}  // namespace redsat
