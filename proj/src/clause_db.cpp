#include "redsat/clause_db.hpp"

#include <algorithm>
#include <cassert>

namespace redsat {

const char* to_string(Schedule s) {
    return s == Schedule::Minisat ? "minisat" : "glucose";
}

std::optional<Schedule> schedule_from_string(std::string_view name) {
    if (name == "minisat") return Schedule::Minisat;
    if (name == "glucose") return Schedule::Glucose;
    return std::nullopt;
}

ClauseDb::ClauseDb(const DbConfig& config, Strategy& strategy) : config_(config), strategy_(strategy) {
    init_schedule(0);
}

void ClauseDb::init_schedule(size_t num_original_clauses) {
    max_learnts_ = static_cast<double>(num_original_clauses) * config_.learntsize_factor;
    adjust_confl_ = config_.adjust_start;
    adjust_cnt_ = static_cast<int>(adjust_confl_);
    next_reduce_at_ = static_cast<uint64_t>(config_.glucose_first);
    reductions_ = 0;
}

ClauseRef ClauseDb::add_original(std::vector<Lit> lits) {
    assert(lits.size() >= 2);
    ClauseRef ref;
    if (!free_slots_.empty()) {
        ref = free_slots_.back();
        free_slots_.pop_back();
    } else {
        ref = static_cast<ClauseRef>(arena_.size());
        arena_.emplace_back();
    }
    Clause& c = arena_[ref];
    c = Clause{};
    c.lits = std::move(lits);
    return ref;
}

ClauseRef ClauseDb::add_learned(std::vector<Lit> lits, const LevelView& levels, int conflict_level,
                                uint64_t conflict_index) {
    assert(lits.size() >= 2);
    ClauseRef ref = add_original(std::move(lits));
    Clause& c = arena_[ref];
    c.learnt = true;
    c.birth = conflict_index;
    c.uid = next_uid_++;
    c.lbd = compute_lbd(c.lits, levels);
    assert(c.lbd <= c.size());
    c.activity = strategy_.initial_activity(c.lits, levels, conflict_index);
    learned_.push_back(ref);
    if (listener_) {
        std::vector<int32_t> lit_levels;
        lit_levels.reserve(c.lits.size());
        for (Lit l : c.lits) lit_levels.push_back(levels.lev(l));
        listener_->on_learned(c, lit_levels, conflict_level);
    }
    return ref;
}

void ClauseDb::on_conflict() {
    if (config_.schedule != Schedule::Minisat) return;
    if (--adjust_cnt_ == 0) {
        adjust_confl_ *= config_.adjust_inc;
        adjust_cnt_ = static_cast<int>(adjust_confl_);
        max_learnts_ *= config_.learntsize_inc;
    }
}

bool ClauseDb::should_reduce(size_t num_assigned, uint64_t conflicts) const {
    if (config_.schedule == Schedule::Minisat)
        return static_cast<double>(learned_.size()) - static_cast<double>(num_assigned) >= max_learnts_;
    return conflicts >= next_reduce_at_;
}

size_t ClauseDb::reduce(const std::function<bool(ClauseRef)>& locked,
                        const std::function<void(ClauseRef, const Clause&)>& on_delete) {
    // Deletion order: largest activity first, ties broken toward older
    // clauses. The back half of this order is the half that is kept.
    std::sort(learned_.begin(), learned_.end(), [this](ClauseRef a, ClauseRef b) {
        const Clause& ca = arena_[a];
        const Clause& cb = arena_[b];
        if (ca.activity != cb.activity) return ca.activity > cb.activity;
        return ca.birth < cb.birth;
    });

    const size_t zone = learned_.size() / 2;
    size_t kept = 0;
    size_t deleted = 0;
    for (size_t i = 0; i < learned_.size(); ++i) {
        ClauseRef ref = learned_[i];
        Clause& c = arena_[ref];
        if (i < zone && c.size() > 2 && !locked(ref)) {
            if (on_delete) on_delete(ref, c);
            if (listener_) listener_->on_deleted(c);
            c = Clause{};
            free_slots_.push_back(ref);
            ++deleted;
        } else {
            c.protected_this_round = i < zone;  // locked or binary inside the deletion zone
            learned_[kept++] = ref;
        }
    }
    learned_.resize(kept);

    ++reductions_;
    if (config_.schedule == Schedule::Glucose)
        next_reduce_at_ += static_cast<uint64_t>(config_.glucose_first) +
                           static_cast<uint64_t>(config_.glucose_inc) * reductions_;
    return deleted;
}

void ClauseDb::apply_activity(ClauseRef ref, double fresh) {
    Clause& c = arena_[ref];
    if (fresh == c.activity) return;
    double old = c.activity;
    c.activity = fresh;
    if (listener_) listener_->on_activity(c, old);
}

void ClauseDb::on_reason_used(ClauseRef ref, int level, const LevelView& levels) {
    const Clause& c = arena_[ref];
    assert(c.learnt);
    apply_activity(ref, strategy_.on_reason_used(c.activity, c.lits, level, levels));
}

void ClauseDb::on_conflict_analysis(ClauseRef ref, int conflict_level, const LevelView& levels) {
    const Clause& c = arena_[ref];
    assert(c.learnt);
    apply_activity(ref, strategy_.on_conflict_analysis(c.activity, c.lits, conflict_level, levels));
}

}  // namespace redsat
