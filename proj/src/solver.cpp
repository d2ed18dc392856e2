#include "redsat/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <ctime>

namespace redsat {

double luby(double y, int x) {
    // Find the finite subsequence containing x and the position within it.
    int size = 1;
    int seq = 0;
    while (size < x + 1) {
        seq++;
        size = 2 * size + 1;
    }
    while (size - 1 != x) {
        size = (size - 1) >> 1;
        seq--;
        x = x % size;
    }
    return std::pow(y, seq);
}

namespace {

double thread_cpu_seconds() {
    timespec ts{};
    clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
    return static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) * 1e-9;
}

}  // namespace

// ---- VarOrder ----

void Solver::VarOrder::insert(Var v) {
    if (contains(v)) return;
    index_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    sift_up(index_[v]);
}

Var Solver::VarOrder::pop() {
    assert(!heap_.empty());
    Var top = heap_[0];
    heap_[0] = heap_.back();
    index_[heap_[0]] = 0;
    heap_.pop_back();
    index_[top] = -1;
    if (!heap_.empty()) sift_down(0);
    return top;
}

void Solver::VarOrder::bumped(Var v) {
    if (contains(v)) sift_up(index_[v]);
}

void Solver::VarOrder::updated(Var v) {
    if (!contains(v)) return;
    sift_up(index_[v]);
    sift_down(index_[v]);
}

void Solver::VarOrder::sift_up(int i) {
    Var v = heap_[i];
    while (i > 0) {
        int parent = (i - 1) >> 1;
        if (!before(v, heap_[parent])) break;
        heap_[i] = heap_[parent];
        index_[heap_[i]] = i;
        i = parent;
    }
    heap_[i] = v;
    index_[v] = i;
}

void Solver::VarOrder::sift_down(int i) {
    Var v = heap_[i];
    const int n = static_cast<int>(heap_.size());
    for (;;) {
        int child = 2 * i + 1;
        if (child >= n) break;
        if (child + 1 < n && before(heap_[child + 1], heap_[child])) child++;
        if (!before(heap_[child], v)) break;
        heap_[i] = heap_[child];
        index_[heap_[i]] = i;
        i = child;
    }
    heap_[i] = v;
    index_[v] = i;
}

// ---- Solver ----

Solver::Solver(const Instance& inst, const StrategyConfig& strategy, const DbConfig& db,
               const SolverOptions& opts)
    : num_vars_(inst.num_vars),
      opts_(opts),
      strategy_(strategy, inst.num_vars),
      db_(db, strategy_),
      assigns_(inst.num_vars, Value::Undef),
      level_(inst.num_vars, 0),
      reason_(inst.num_vars, kNoClause),
      watches_(2 * static_cast<size_t>(inst.num_vars)),
      activity_(inst.num_vars, 0.0),
      polarity_(inst.num_vars, 0),
      order_(activity_),
      seen_(inst.num_vars, 0) {
    order_.grow(num_vars_);
    for (Var v = 0; v < num_vars_; ++v) order_.insert(v);

    num_original_ = inst.clauses.size();
    db_.init_schedule(num_original_);
    if (inst.empty_clauses > 0) ok_ = false;

    for (const auto& lits : inst.clauses) {
        if (!ok_) break;
        assert(!lits.empty());
        if (lits.size() == 1) {
            Lit l = lits[0];
            if (value(l) == Value::False)
                ok_ = false;
            else if (value(l) == Value::Undef)
                enqueue(l, kNoClause);
        } else {
            attach(db_.add_original(lits));
        }
    }
}

void Solver::attach(ClauseRef cr) {
    const Clause& c = db_.clause(cr);
    assert(c.size() >= 2);
    watches_[(~c[0]).index()].push_back(Watcher{cr, c[1]});
    watches_[(~c[1]).index()].push_back(Watcher{cr, c[0]});
}

void Solver::detach(ClauseRef cr) {
    const Clause& c = db_.clause(cr);
    for (int i = 0; i < 2; ++i) {
        auto& ws = watches_[(~c[i]).index()];
        auto it = std::find_if(ws.begin(), ws.end(),
                               [cr](const Watcher& w) { return w.cref == cr; });
        assert(it != ws.end());
        ws.erase(it);
    }
}

void Solver::enqueue(Lit p, ClauseRef from) {
    assert(value(p) == Value::Undef);
    Var v = p.var();
    assigns_[v] = p.neg() ? Value::False : Value::True;
    level_[v] = decision_level();
    reason_[v] = from;
    trail_.push_back(p);
    if (from != kNoClause && db_.clause(from).learnt)
        db_.on_reason_used(from, decision_level(), levels());
}

ClauseRef Solver::propagate() {
    ClauseRef confl = kNoClause;
    while (qhead_ < trail_.size()) {
        const Lit p = trail_[qhead_++];
        ++stats_.propagations;
        auto& ws = watches_[p.index()];
        size_t i = 0;
        size_t j = 0;
        const Lit false_lit = ~p;
        while (i < ws.size()) {
            // Satisfied by the blocker: keep the watcher untouched.
            if (value(ws[i].blocker) == Value::True) {
                ws[j++] = ws[i++];
                continue;
            }
            const ClauseRef cr = ws[i].cref;
            Clause& c = db_.clause(cr);
            if (c[0] == false_lit) std::swap(c.lits[0], c.lits[1]);
            assert(c[1] == false_lit);
            i++;

            const Lit first = c[0];
            const Watcher w{cr, first};
            if (value(first) == Value::True) {
                ws[j++] = w;
                continue;
            }
            // Look for an unfalsified literal to watch instead.
            bool moved = false;
            for (int k = 2; k < c.size(); ++k) {
                if (value(c[k]) != Value::False) {
                    std::swap(c.lits[1], c.lits[k]);
                    watches_[(~c[1]).index()].push_back(w);
                    moved = true;
                    break;
                }
            }
            if (moved) continue;

            // Clause is unit or conflicting under the current trail.
            ws[j++] = w;
            if (value(first) == Value::False) {
                confl = cr;
                qhead_ = trail_.size();
                while (i < ws.size()) ws[j++] = ws[i++];
            } else {
                enqueue(first, cr);
            }
        }
        ws.resize(j);
        if (confl != kNoClause) break;
    }
    return confl;
}

Lit Solver::decide() {
    Var next = -1;
    while (!order_.empty()) {
        Var v = order_.pop();
        if (assigns_[v] == Value::Undef) {
            next = v;
            break;
        }
    }
    assert(next >= 0 && "decide() requires an unassigned variable");
    ++stats_.decisions;
    Lit l = Lit::make(next, polarity_[next] == 0);
    push_decision(l);
    return l;
}

void Solver::push_decision(Lit l) {
    trail_lim_.push_back(static_cast<int>(trail_.size()));
    enqueue(l, kNoClause);
}

void Solver::backjump(int target) {
    assert(target >= 0 && target <= decision_level());
    if (decision_level() <= target) return;
    const int keep = trail_lim_[target];
    for (int i = static_cast<int>(trail_.size()) - 1; i >= keep; --i) {
        Var v = trail_[i].var();
        if (opts_.phase_saving) polarity_[v] = assigns_[v] == Value::True ? 1 : 0;
        assigns_[v] = Value::Undef;
        reason_[v] = kNoClause;
        order_.insert(v);
    }
    trail_.resize(keep);
    trail_lim_.resize(target);
    qhead_ = trail_.size();
}

void Solver::set_var_activity(Var v, double act) {
    activity_[v] = act;
    order_.updated(v);
}

void Solver::bump_var(Var v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
        for (auto& a : activity_) a *= 1e-100;
        var_inc_ *= 1e-100;
    }
    order_.bumped(v);
}

std::pair<std::vector<Lit>, int> Solver::analyze_conflict(ClauseRef confl) {
    assert(decision_level() > 0);
    const int conflict_level = decision_level();
    std::vector<Lit> learnt;
    learnt.push_back(kLitUndef);  // reserved for the asserting literal

    int path = 0;  // unresolved literals at the conflict level
    Lit p = kLitUndef;
    int index = static_cast<int>(trail_.size()) - 1;
    ClauseRef cr = confl;

    do {
        assert(cr != kNoClause);
        const Clause& c = db_.clause(cr);
        if (c.learnt) db_.on_conflict_analysis(cr, conflict_level, levels());
        for (int j = (p == kLitUndef) ? 0 : 1; j < c.size(); ++j) {
            Lit q = c[j];
            Var v = q.var();
            if (seen_[v] || level_[v] == 0) continue;
            seen_[v] = 1;
            bump_var(v);
            if (level_[v] >= conflict_level)
                ++path;
            else
                learnt.push_back(q);
        }
        while (!seen_[trail_[index--].var()]) {}
        p = trail_[index + 1];
        cr = reason_[p.var()];
        seen_[p.var()] = 0;
        --path;
    } while (path > 0);
    learnt[0] = ~p;

    analyze_toclear_ = learnt;
    if (opts_.ccmin) {
        uint32_t abstract = 0;
        for (size_t k = 1; k < learnt.size(); ++k) abstract |= abstract_level(learnt[k].var());
        size_t j = 1;
        for (size_t k = 1; k < learnt.size(); ++k) {
            if (reason_[learnt[k].var()] == kNoClause || !lit_redundant(learnt[k], abstract))
                learnt[j++] = learnt[k];
        }
        learnt.resize(j);
    }

    int bt = 0;
    if (learnt.size() > 1) {
        // Move a literal of the highest remaining level next to the asserting
        // one; it becomes the second watch and defines the backjump level.
        size_t max_i = 1;
        for (size_t k = 2; k < learnt.size(); ++k) {
            if (level_[learnt[k].var()] > level_[learnt[max_i].var()]) max_i = k;
        }
        std::swap(learnt[1], learnt[max_i]);
        bt = level_[learnt[1].var()];
    }

    for (Lit l : analyze_toclear_) seen_[l.var()] = 0;
    return {std::move(learnt), bt};
}

// Is p implied by other literals marked in the current learned clause?
// Walks p's implication graph; any path escaping the marked levels fails.
bool Solver::lit_redundant(Lit p, uint32_t abstract_levels) {
    analyze_stack_.clear();
    analyze_stack_.push_back(p);
    const size_t top = analyze_toclear_.size();
    while (!analyze_stack_.empty()) {
        Var v = analyze_stack_.back().var();
        analyze_stack_.pop_back();
        assert(reason_[v] != kNoClause);
        const Clause& c = db_.clause(reason_[v]);
        for (int i = 1; i < c.size(); ++i) {
            Lit q = c[i];
            Var x = q.var();
            if (seen_[x] || level_[x] == 0) continue;
            if (reason_[x] != kNoClause && (abstract_level(x) & abstract_levels) != 0) {
                seen_[x] = 1;
                analyze_stack_.push_back(q);
                analyze_toclear_.push_back(q);
            } else {
                for (size_t k = top; k < analyze_toclear_.size(); ++k)
                    seen_[analyze_toclear_[k].var()] = 0;
                analyze_toclear_.resize(top);
                return false;
            }
        }
    }
    return true;
}

bool Solver::handle_conflict(ClauseRef confl) {
    ++stats_.conflicts;
    db_.on_conflict();
    if (decision_level() == 0) {
        ok_ = false;
        return false;
    }
    auto [learnt, bt] = analyze_conflict(confl);
    if (drat_) drat_->add(learnt);
    if (learnt.size() == 1) {
        backjump(0);
        enqueue(learnt[0], kNoClause);
    } else {
        // Register before backjumping: initial activities and the LBD are
        // measured against the conflict-time trail.
        ClauseRef cr =
            db_.add_learned(std::move(learnt), levels(), decision_level(), stats_.conflicts);
        attach(cr);
        backjump(bt);
        enqueue(db_.clause(cr)[0], cr);
    }
    ++stats_.learned_clauses;
    stats_.peak_learned = std::max<uint64_t>(stats_.peak_learned, db_.learned_count());
    var_inc_ /= opts_.var_decay;
    return true;
}

bool Solver::locked(ClauseRef cr) const {
    const Clause& c = db_.clause(cr);
    return value(c[0]) == Value::True && reason_[c[0].var()] == cr;
}

void Solver::reduce_db() {
    size_t deleted = db_.reduce([this](ClauseRef cr) { return locked(cr); },
                                [this](ClauseRef cr, const Clause& c) {
                                    detach(cr);
                                    if (drat_) drat_->del(c.lits);
                                });
    ++stats_.reductions;
    stats_.clauses_deleted += deleted;
}

SolveResult Solver::solve(const Limits& limits) {
    const double cpu0 = thread_cpu_seconds();
    const auto wall0 = std::chrono::steady_clock::now();
    auto finish = [&](Answer a) {
        stats_.cpu_time_s = thread_cpu_seconds() - cpu0;
        SolveResult res;
        res.answer = a;
        if (a == Answer::Sat) {
            res.model.resize(num_vars_);
            for (Var v = 0; v < num_vars_; ++v) res.model[v] = assigns_[v] == Value::True;
        }
        if (a == Answer::Unsat && drat_) {
            drat_->add_empty();
            drat_->flush();
        }
        res.stats = stats_;
        return res;
    };
    auto out_of_budget = [&] {
        if (limits.max_conflicts > 0 && stats_.conflicts >= limits.max_conflicts) return true;
        if (limits.timeout_s > 0 && (stats_.conflicts & 127) == 0) {
            std::chrono::duration<double> wall = std::chrono::steady_clock::now() - wall0;
            if (wall.count() >= limits.timeout_s) return true;
        }
        return false;
    };

    if (!ok_) return finish(Answer::Unsat);
    if (decision_level() == 0 && propagate() != kNoClause) {
        // Contradiction among the input units: UNSAT with zero conflicts.
        ok_ = false;
        return finish(Answer::Unsat);
    }

    uint64_t restart_conflicts = 0;
    double restart_budget =
        opts_.restart_first * luby(opts_.restart_inc, static_cast<int>(stats_.restarts));

    for (;;) {
        ClauseRef confl = propagate();
        if (confl != kNoClause) {
            ++restart_conflicts;
            if (!handle_conflict(confl)) return finish(Answer::Unsat);
            if (out_of_budget()) return finish(Answer::Unknown);
        } else {
            if (restart_conflicts >= restart_budget) {
                ++stats_.restarts;
                restart_conflicts = 0;
                restart_budget = opts_.restart_first *
                                 luby(opts_.restart_inc, static_cast<int>(stats_.restarts));
                backjump(0);
                continue;
            }
            if (num_assigned() == static_cast<size_t>(num_vars_)) return finish(Answer::Sat);
            if (db_.should_reduce(num_assigned(), stats_.conflicts)) reduce_db();
            decide();
        }
    }
}

bool Solver::check_trail_invariants() const {
    int cur_level = 0;
    for (size_t i = 0; i < trail_.size(); ++i) {
        Lit p = trail_[i];
        Var v = p.var();
        if (value(p) != Value::True) return false;
        // Decision boundaries: trail_lim_[d] is where level d+1 begins.
        while (cur_level < decision_level() &&
               static_cast<int>(i) == trail_lim_[cur_level])
            ++cur_level;
        if (level_[v] != cur_level) return false;
        ClauseRef r = reason_[v];
        const bool is_decision =
            cur_level > 0 && static_cast<int>(i) == trail_lim_[cur_level - 1];
        if (is_decision || cur_level == 0) {
            // Level-0 facts may carry kNoClause reasons (input units, learned
            // units); decisions always do.
            if (is_decision && r != kNoClause) return false;
            if (is_decision) continue;
        }
        if (r == kNoClause) {
            if (cur_level != 0) return false;
            continue;
        }
        const Clause& c = db_.clause(r);
        if (c[0] != p) return false;
        for (int k = 1; k < c.size(); ++k) {
            if (value(c[k]) != Value::False) return false;
            if (level_[c[k].var()] > level_[v]) return false;
        }
    }
    return true;
}

}  // namespace redsat
