#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "redsat/clause_db.hpp"
#include "redsat/dimacs.hpp"
#include "redsat/drat.hpp"
#include "redsat/levels.hpp"
#include "redsat/strategies.hpp"
#include "redsat/types.hpp"

namespace redsat {

struct Stats {
    uint64_t conflicts = 0;
    uint64_t decisions = 0;
    uint64_t propagations = 0;
    uint64_t restarts = 0;
    uint64_t reductions = 0;
    uint64_t clauses_deleted = 0;
    uint64_t learned_clauses = 0;
    uint64_t peak_learned = 0;
    double cpu_time_s = 0;
};

struct Limits {
    double timeout_s = 0;        // wall clock; 0 = none
    uint64_t max_conflicts = 0;  // 0 = none
};

struct SolverOptions {
    bool ccmin = true;          // recursive learned-clause minimization
    bool phase_saving = true;
    double var_decay = 0.95;    // VSIDS decay per conflict
    int restart_first = 100;    // Luby restarts: base interval
    double restart_inc = 2.0;   // and sequence factor
};

struct SolveResult {
    Answer answer = Answer::Unknown;
    std::vector<bool> model;  // complete assignment when SAT
    Stats stats;
};

// MiniSAT's Luby sequence helper: luby(y, i) = y^k where the (0-based) i-th
// element of the Luby sequence is 2^k. First elements: 1,1,2,1,1,2,4,...
double luby(double y, int x);

// CDCL search engine: two-watched-literal propagation, First-UIP learning,
// VSIDS decisions with phase saving, Luby restarts. The learned-clause
// database and its reduction policy are owned by ClauseDb + Strategy; the
// engine only reports reason-usage and conflict-analysis events to them.
//
// A solver owns all of its state; instances never share anything mutable, so
// any number may run concurrently.
class Solver {
  public:
    Solver(const Instance& inst, const StrategyConfig& strategy = {}, const DbConfig& db = {},
           const SolverOptions& opts = {});

    SolveResult solve(const Limits& limits = {});

    // ---- CDCL primitives, exposed for tests and instrumentation ----

    // Runs unit propagation to fixpoint; returns the first conflicting clause
    // or kNoClause.
    ClauseRef propagate();

    // Picks the unassigned variable of maximal VSIDS activity (ties: lowest
    // index), starts a new decision level and assigns the saved phase.
    // Requires at least one unassigned variable.
    Lit decide();

    // Starts a new decision level and enqueues an explicit decision literal.
    void push_decision(Lit l);

    // First-UIP learned clause and its backjump level. Bumps the VSIDS
    // activity of every variable seen during resolution and fires the
    // strategy's conflict-analysis hook for each learned clause resolved.
    // Requires decision_level() >= 1 and a falsified conflict clause.
    std::pair<std::vector<Lit>, int> analyze_conflict(ClauseRef confl);

    // Undoes all assignments above `level`, saving phases.
    void backjump(int level);

    // Full conflict-handling step: counts the conflict, learns the First-UIP
    // clause, backjumps and asserts it. Returns false when the conflict is at
    // level 0 (the instance is UNSAT). solve() is this plus decisions,
    // restarts and reductions; tests drive it directly.
    bool handle_conflict(ClauseRef confl);

    // Halves the learned database (locked/binary clauses kept), updating
    // watches, stats and the DRAT log.
    void reduce_db();

    // ---- state views ----
    Value value(Var v) const { return assigns_[v]; }
    Value value(Lit l) const { return l.neg() ? -assigns_[l.var()] : assigns_[l.var()]; }
    int level(Var v) const { return level_[v]; }  // defined while v is on the trail
    ClauseRef reason(Var v) const { return reason_[v]; }
    int decision_level() const { return static_cast<int>(trail_lim_.size()); }
    size_t num_assigned() const { return trail_.size(); }
    const std::vector<Lit>& trail() const { return trail_; }
    int num_vars() const { return num_vars_; }
    bool ok() const { return ok_; }

    double var_activity(Var v) const { return activity_[v]; }
    // Overrides a variable's VSIDS score (e.g. to seed a warm start).
    void set_var_activity(Var v, double act);

    Stats& stats() { return stats_; }
    const Stats& stats() const { return stats_; }
    ClauseDb& db() { return db_; }
    LevelView levels() const { return LevelView{level_}; }

    void set_drat(DratWriter* w) { drat_ = w; }
    void set_listener(ClauseDb::Listener* l) { db_.set_listener(l); }

    // Trail consistency: levels nondecreasing along the stack, and every
    // propagated literal's reason clause has the implied literal first with
    // the rest false at levels <= its own. Used by tests.
    bool check_trail_invariants() const;

  private:
    struct Watcher {
        ClauseRef cref;
        Lit blocker;
    };

    // Max-heap of variables ordered by (activity, then lowest index).
    class VarOrder {
      public:
        explicit VarOrder(const std::vector<double>& act) : act_(act) {}
        void grow(int n) { index_.resize(n, -1); }
        bool contains(Var v) const { return index_[v] >= 0; }
        bool empty() const { return heap_.empty(); }
        void insert(Var v);
        Var pop();
        void bumped(Var v);   // activity increased; restore heap order
        void updated(Var v);  // activity changed either way

      private:
        bool before(Var x, Var y) const { return act_[x] > act_[y] || (act_[x] == act_[y] && x < y); }
        void sift_up(int i);
        void sift_down(int i);

        const std::vector<double>& act_;
        std::vector<Var> heap_;
        std::vector<int> index_;
    };

    void attach(ClauseRef cr);
    void detach(ClauseRef cr);
    void enqueue(Lit p, ClauseRef from);
    void bump_var(Var v);
    uint32_t abstract_level(Var v) const { return 1u << (level_[v] & 31); }
    bool lit_redundant(Lit p, uint32_t abstract_levels);
    bool locked(ClauseRef cr) const;

    int num_vars_;
    size_t num_original_ = 0;
    bool ok_ = true;
    SolverOptions opts_;

    Strategy strategy_;
    ClauseDb db_;
    DratWriter* drat_ = nullptr;

    std::vector<Value> assigns_;
    std::vector<int32_t> level_;
    std::vector<ClauseRef> reason_;
    std::vector<Lit> trail_;
    std::vector<int> trail_lim_;
    size_t qhead_ = 0;

    std::vector<std::vector<Watcher>> watches_;  // indexed by Lit::index()

    std::vector<double> activity_;
    double var_inc_ = 1.0;
    std::vector<char> polarity_;  // saved phase; initially false
    VarOrder order_;

    std::vector<char> seen_;
    std::vector<Lit> analyze_toclear_;
    std::vector<Lit> analyze_stack_;

    Stats stats_;
};

}  // namespace redsat
