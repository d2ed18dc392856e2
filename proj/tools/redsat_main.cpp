// redsat: CDCL SAT solver with pluggable learned-clause reduction strategies.
//
//   redsat solve <file.cnf> [--strategy sbr --k 12 --seed N --schedule minisat
//                            --timeout S --verify --drat proof.drat]
//   redsat bench <dir> --strategies size,sbr:8,lbd --out results.csv
//                      [--timeout S --seed N --schedule minisat --jobs W]
//
// Exit codes for solve: 10 SAT, 20 UNSAT, 0 UNKNOWN, 1 on usage/parse errors.
// Every flag can also be set through an REDSAT_* environment variable
// (command-line value wins).

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "redsat/bench.hpp"
#include "redsat/oracle.hpp"

namespace {

using namespace redsat;

// "sbr" or "sbr:8" -> config; throws CLI::ValidationError on unknown names.
StrategyConfig parse_strategy_entry(const std::string& entry, uint32_t seed) {
    StrategyConfig sc;
    sc.seed = seed;
    std::string name = entry;
    if (auto colon = entry.find(':'); colon != std::string::npos) {
        name = entry.substr(0, colon);
        try {
            sc.k = std::stoi(entry.substr(colon + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--strategies", "bad k in '" + entry + "'");
        }
        if (sc.k <= 0) throw CLI::ValidationError("--strategies", "k must be positive");
    }
    auto kind = strategy_from_string(name);
    if (!kind) throw CLI::ValidationError("--strategies", "unknown strategy '" + name + "'");
    sc.kind = *kind;
    return sc;
}

// Default reduction schedule follows the strategy family unless forced.
Schedule pick_schedule(const std::string& requested, StrategyKind kind) {
    if (requested == "minisat") return Schedule::Minisat;
    if (requested == "glucose") return Schedule::Glucose;
    return (kind == StrategyKind::GlucoseSizeKD || kind == StrategyKind::GlucoseSbr)
               ? Schedule::Glucose
               : Schedule::Minisat;
}

const std::vector<std::string> kStrategyNames = {
    "size", "rand", "fifo", "sbr", "sized", "sizekd", "reld", "lbd", "lbdd",
    "glucose-sizekd", "glucose-sbr"};

int cmd_solve(const std::string& file, const std::string& strategy_name, int k, uint32_t seed,
              const std::string& schedule_name, double timeout, bool verify,
              const std::string& drat_path) {
    Instance inst;
    try {
        if (file == "-") {
            inst = parse_dimacs(std::cin);
        } else {
            inst = parse_dimacs_file(file);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    for (const auto& w : inst.warnings) std::cerr << "c warning: " << w << "\n";

    StrategyConfig sc;
    sc.kind = *strategy_from_string(strategy_name);  // choices pre-validated by CLI11
    sc.k = k;
    sc.seed = seed;

    bench::RunConfig cfg;
    cfg.strategy = sc;
    cfg.schedule = pick_schedule(schedule_name, sc.kind);
    cfg.timeout_s = timeout;

    std::ofstream drat_file;
    std::unique_ptr<DratWriter> drat;
    if (!drat_path.empty()) {
        drat_file.open(drat_path);
        if (!drat_file) {
            std::cerr << "error: cannot open DRAT sink " << drat_path << "\n";
            return 1;
        }
        drat = std::make_unique<DratWriter>(drat_file);
    }

    std::vector<bool> model;
    bench::RunReport report =
        bench::run_instance(inst, file, cfg, drat.get(), &model);

    const Stats& st = report.stats;
    std::cout << "c strategy " << to_string(sc.kind)
              << (uses_k(sc.kind) ? " k=" + std::to_string(sc.k > 0 ? sc.k : default_k(sc.kind))
                                  : "")
              << " seed=" << sc.seed << " schedule=" << to_string(cfg.schedule) << "\n";
    std::cout << "c conflicts " << st.conflicts << " decisions " << st.decisions
              << " propagations " << st.propagations << "\n";
    std::cout << "c restarts " << st.restarts << " reductions " << st.reductions
              << " deleted " << st.clauses_deleted << " peak_learned " << st.peak_learned
              << "\n";
    std::cout << "c cpu_time " << st.cpu_time_s << " s\n";

    if (report.answer == Answer::Sat) {
        if (verify) {
            if (!oracle::check_model(inst, model)) {
                std::cerr << "error: model failed verification\n";
                return 1;
            }
            std::cout << "c model verified\n";
        }
        std::cout << "s SATISFIABLE\n";
        std::cout << "v";
        for (size_t v = 0; v < model.size(); ++v)
            std::cout << ' ' << (model[v] ? static_cast<int>(v) + 1 : -(static_cast<int>(v) + 1));
        std::cout << " 0\n";
    } else if (report.answer == Answer::Unsat) {
        std::cout << "s UNSATISFIABLE\n";
    } else {
        std::cout << "s UNKNOWN\n";
    }
    return bench::exit_code(report.answer);
}

int cmd_bench(const std::string& dir, const std::string& strategies, uint32_t seed,
              const std::string& schedule_name, double timeout, const std::string& out_path,
              int jobs) {
    std::vector<bench::RunConfig> configs;
    std::stringstream ss(strategies);
    std::string entry;
    while (std::getline(ss, entry, ',')) {
        if (entry.empty()) continue;
        bench::RunConfig cfg;
        cfg.strategy = parse_strategy_entry(entry, seed);
        cfg.schedule = pick_schedule(schedule_name, cfg.strategy.kind);
        cfg.timeout_s = timeout;
        configs.push_back(cfg);
    }
    if (configs.empty()) {
        std::cerr << "error: --strategies selected nothing\n";
        return 1;
    }

    std::vector<std::string> paths;
    try {
        paths = bench::list_cnf_files(dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (paths.empty()) {
        std::cerr << "error: no .cnf files under " << dir << "\n";
        return 1;
    }

    bench::BatchResult result = bench::run_batch(paths, configs, jobs);
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << "\n";
        return 1;
    }
    bench::write_csv(out, result);
    std::cerr << result.rows.size() << " runs -> " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"redsat: CDCL SAT solver with pluggable clause-database reduction"};
    app.require_subcommand(1);

    std::string strategy = "sbr";
    int k = 0;  // 0 = strategy default
    uint32_t seed = MiniSatRng::kDefaultSeed;
    std::string schedule;  // empty = follow the strategy family
    double timeout = 0;

    // solve
    auto* solve = app.add_subcommand("solve", "solve a single DIMACS CNF file");
    std::string file;
    bool verify = false;
    std::string drat_path;
    solve->add_option("file", file, "input .cnf ('-' for stdin)")->required();
    solve->add_option("--strategy", strategy, "reduction strategy")
        ->check(CLI::IsMember(kStrategyNames))
        ->envname("REDSAT_STRATEGY")
        ->capture_default_str();
    solve->add_option("--k", k, "size bound for k-parameterized strategies")
        ->envname("REDSAT_K");
    solve->add_option("--seed", seed, "PRNG seed")->envname("REDSAT_SEED")->capture_default_str();
    solve->add_option("--schedule", schedule, "reduction schedule")
        ->check(CLI::IsMember({"minisat", "glucose"}))
        ->envname("REDSAT_SCHEDULE");
    solve->add_option("--timeout", timeout, "wall-clock limit in seconds (0 = none)")
        ->envname("REDSAT_TIMEOUT");
    solve->add_flag("--verify", verify, "check the model against the input")
        ->envname("REDSAT_VERIFY");
    solve->add_option("--drat", drat_path, "write a DRAT proof here")->envname("REDSAT_DRAT");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "run a corpus and write a CSV");
    std::string dir;
    std::string strategies;
    std::string out_path = "results.csv";
    int jobs = 1;
    bench_cmd->add_option("dir", dir, "directory of .cnf files")->required();
    bench_cmd
        ->add_option("--strategies", strategies,
                     "comma-separated strategies, each 'name' or 'name:k'")
        ->required()
        ->envname("REDSAT_STRATEGIES");
    bench_cmd->add_option("--timeout", timeout, "per-instance wall-clock limit in seconds")
        ->envname("REDSAT_TIMEOUT");
    bench_cmd->add_option("--out", out_path, "output CSV path")
        ->envname("REDSAT_OUT")
        ->capture_default_str();
    bench_cmd->add_option("--seed", seed, "PRNG seed for every run")
        ->envname("REDSAT_SEED")
        ->capture_default_str();
    bench_cmd->add_option("--schedule", schedule, "force one reduction schedule for all runs")
        ->check(CLI::IsMember({"minisat", "glucose"}))
        ->envname("REDSAT_SCHEDULE");
    bench_cmd->add_option("--jobs", jobs, "concurrent solvers")
        ->check(CLI::PositiveNumber)
        ->envname("REDSAT_JOBS")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed())
        return cmd_solve(file, strategy, k, seed, schedule, timeout, verify, drat_path);
    return cmd_bench(dir, strategies, seed, schedule, timeout, out_path, jobs);
}
