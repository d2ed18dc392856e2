#include "redsat/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "redsat/prng.hpp"

namespace redsat {
namespace oracle {

namespace {

// Backtracking enumerator over variables in index order. Per-clause counters
// track falsified literals so a dead branch is pruned as soon as some clause
// has every literal false.
class Enumerator {
  public:
    explicit Enumerator(const Instance& inst)
        : inst_(inst), assign_(inst.num_vars, false), false_count_(inst.clauses.size(), 0) {
        occ_.resize(2 * std::max(inst.num_vars, 1));
        for (size_t ci = 0; ci < inst_.clauses.size(); ++ci)
            for (Lit l : inst_.clauses[ci]) occ_[l.index()].push_back(static_cast<int>(ci));
    }

    bool run(std::vector<bool>& witness) {
        if (inst_.empty_clauses > 0) return false;
        if (search(0)) {
            witness = assign_;
            return true;
        }
        return false;
    }

  private:
    // Sets variable v; returns false if some clause became fully false.
    bool apply(Var v, bool value) {
        assign_[v] = value;
        Lit falsified = Lit::make(v, /*neg=*/value);  // the literal made false
        for (int ci : occ_[falsified.index()]) {
            if (++false_count_[ci] == static_cast<int>(inst_.clauses[ci].size())) {
                undo_partial(v, value, ci);
                return false;
            }
        }
        return true;
    }

    void undo(Var v, bool value) {
        Lit falsified = Lit::make(v, value);
        for (int ci : occ_[falsified.index()]) --false_count_[ci];
    }

    // Undo the counters already incremented before the clause `stop_ci`
    // turned fully false (inclusive).
    void undo_partial(Var v, bool value, int stop_ci) {
        Lit falsified = Lit::make(v, value);
        for (int ci : occ_[falsified.index()]) {
            --false_count_[ci];
            if (ci == stop_ci) break;
        }
    }

    bool search(Var v) {
        if (v == inst_.num_vars) return true;
        for (bool value : {false, true}) {
            if (apply(v, value)) {
                if (search(v + 1)) return true;
                undo(v, value);
            }
        }
        return false;
    }

    const Instance& inst_;
    std::vector<bool> assign_;
    std::vector<int> false_count_;
    std::vector<std::vector<int>> occ_;
};

}  // namespace

OracleResult solve_bruteforce(const Instance& inst) {
    if (inst.num_vars > kMaxBruteforceVars)
        throw std::invalid_argument("solve_bruteforce: instance too large (" + std::to_string(inst.num_vars) +
                                    " > " + std::to_string(kMaxBruteforceVars) + " vars)");
    Enumerator en(inst);
    OracleResult res;
    res.sat = en.run(res.witness);
    return res;
}

bool check_model(const Instance& inst, const std::vector<bool>& model) {
    if (static_cast<int>(model.size()) != inst.num_vars)
        throw std::invalid_argument("check_model: incomplete model");
    if (inst.empty_clauses > 0) return false;
    for (const auto& c : inst.clauses) {
        bool sat = false;
        for (Lit l : c) {
            if (model[l.var()] != l.neg()) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

Instance gen_random_3cnf(int num_vars, int num_clauses, uint32_t seed) {
    if (num_vars < 3) throw std::invalid_argument("gen_random_3cnf: need at least 3 variables");
    MiniSatRng rng(seed);
    Instance inst;
    inst.num_vars = num_vars;
    inst.clauses.reserve(num_clauses);
    for (int i = 0; i < num_clauses; ++i) {
        Var vs[3];
        for (int j = 0; j < 3; ++j) {
            for (;;) {
                Var v = rng.irand(num_vars);
                bool dup = false;
                for (int k = 0; k < j; ++k) dup |= (vs[k] == v);
                if (!dup) {
                    vs[j] = v;
                    break;
                }
            }
        }
        std::vector<Lit> clause;
        clause.reserve(3);
        for (int j = 0; j < 3; ++j) clause.push_back(Lit::make(vs[j], rng.drand() < 0.5));
        inst.clauses.push_back(std::move(clause));
    }
    return inst;
}

}  // namespace oracle
}  // namespace redsat
