#include "redsat/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <mutex>
#include <optional>
#include <thread>

namespace redsat::bench {

namespace fs = std::filesystem;

int exit_code(Answer a) {
    switch (a) {
        case Answer::Sat: return 10;
        case Answer::Unsat: return 20;
        case Answer::Unknown: return 0;
    }
    return 0;
}

RunReport run_instance(const Instance& inst, std::string name, const RunConfig& cfg,
                       DratWriter* drat, std::vector<bool>* model_out) {
    DbConfig db;
    db.schedule = cfg.schedule;
    Solver solver(inst, cfg.strategy, db);
    if (drat) solver.set_drat(drat);
    Limits limits;
    limits.timeout_s = cfg.timeout_s;
    SolveResult res = solver.solve(limits);

    RunReport report;
    report.instance = std::move(name);
    report.strategy = cfg.strategy;
    report.schedule = cfg.schedule;
    report.answer = res.answer;
    report.stats = res.stats;
    if (model_out && res.answer == Answer::Sat) *model_out = std::move(res.model);
    return report;
}

RunReport run_single(const std::string& path, const RunConfig& cfg, DratWriter* drat,
                     std::vector<bool>* model_out) {
    Instance inst = parse_dimacs_file(path);
    return run_instance(inst, fs::path(path).filename().string(), cfg, drat, model_out);
}

std::vector<std::string> list_cnf_files(const std::string& dir) {
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".cnf")
            paths.push_back(entry.path().string());
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

BatchResult run_batch(const std::vector<std::string>& paths,
                      const std::vector<RunConfig>& configs, int jobs) {
    BatchResult result;
    result.configs = configs;
    const size_t n_tasks = paths.size() * configs.size();
    std::vector<std::optional<RunReport>> slots(n_tasks);
    std::vector<std::string> warnings;
    std::mutex warn_mutex;
    std::atomic<size_t> next{0};

    auto worker = [&] {
        for (;;) {
            const size_t t = next.fetch_add(1);
            if (t >= n_tasks) return;
            const size_t inst_idx = t / configs.size();
            const size_t cfg_idx = t % configs.size();
            const std::string& path = paths[inst_idx];
            try {
                Instance inst = parse_dimacs_file(path);
                slots[t] = run_instance(inst, fs::path(path).filename().string(),
                                        configs[cfg_idx]);
            } catch (const std::exception& e) {
                if (cfg_idx == 0) {
                    std::lock_guard<std::mutex> lock(warn_mutex);
                    warnings.push_back("skipped " + path + ": " + e.what());
                }
            }
        }
    };

    jobs = std::max(1, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (auto& slot : slots)
        if (slot) result.rows.push_back(std::move(*slot));
    std::sort(warnings.begin(), warnings.end());
    result.warnings = std::move(warnings);
    return result;
}

namespace {

// k column: meaningful only for the k-parameterized strategies.
std::string k_field(const StrategyConfig& sc) {
    if (!uses_k(sc.kind)) return "";
    return std::to_string(sc.k > 0 ? sc.k : default_k(sc.kind));
}

std::string time_field(double seconds) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", seconds);
    return buf;
}

}  // namespace

void write_csv(std::ostream& out, const BatchResult& result) {
    out << "# schema: redsat-bench-csv v1\n";
    out << "instance,strategy,k,seed,schedule,answer,cpu_s,conflicts,decisions,propagations,"
           "restarts,reductions,clauses_deleted,peak_learned\n";
    for (const RunReport& r : result.rows) {
        out << r.instance << ',' << to_string(r.strategy.kind) << ',' << k_field(r.strategy)
            << ',' << r.strategy.seed << ',' << to_string(r.schedule) << ','
            << to_string(r.answer) << ',' << time_field(r.stats.cpu_time_s) << ','
            << r.stats.conflicts << ',' << r.stats.decisions << ',' << r.stats.propagations
            << ',' << r.stats.restarts << ',' << r.stats.reductions << ','
            << r.stats.clauses_deleted << ',' << r.stats.peak_learned << '\n';
    }
    out << "# summary\n";
    out << "strategy,k,seed,schedule,solved,sat,unsat,avg_time_s\n";
    for (const RunConfig& cfg : result.configs) {
        uint64_t sat = 0;
        uint64_t unsat = 0;
        double solved_time = 0;
        for (const RunReport& r : result.rows) {
            if (r.strategy.kind != cfg.strategy.kind || r.strategy.k != cfg.strategy.k ||
                r.strategy.seed != cfg.strategy.seed || r.schedule != cfg.schedule)
                continue;
            if (r.answer == Answer::Sat) {
                ++sat;
                solved_time += r.stats.cpu_time_s;
            } else if (r.answer == Answer::Unsat) {
                ++unsat;
                solved_time += r.stats.cpu_time_s;
            }
        }
        const uint64_t solved = sat + unsat;
        out << to_string(cfg.strategy.kind) << ',' << k_field(cfg.strategy) << ','
            << cfg.strategy.seed << ',' << to_string(cfg.schedule) << ',' << solved << ','
            << sat << ',' << unsat << ',';
        if (solved > 0) out << time_field(solved_time / static_cast<double>(solved));
        out << '\n';
    }
}

}  // namespace redsat::bench
