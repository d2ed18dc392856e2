#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "redsat/clause_db.hpp"
#include "redsat/dimacs.hpp"
#include "redsat/drat.hpp"
#include "redsat/solver.hpp"
#include "redsat/strategies.hpp"

namespace redsat::bench {

struct RunConfig {
    StrategyConfig strategy;
    Schedule schedule = Schedule::Minisat;
    double timeout_s = 0;  // wall clock; 0 = none
};

struct RunReport {
    std::string instance;  // file name as listed
    StrategyConfig strategy;
    Schedule schedule = Schedule::Minisat;
    Answer answer = Answer::Unknown;
    Stats stats;
};

// SAT-competition convention.
int exit_code(Answer a);

// Solves an already-parsed instance. `model_out`, when non-null, receives the
// model on SAT.
RunReport run_instance(const Instance& inst, std::string name, const RunConfig& cfg,
                       DratWriter* drat = nullptr, std::vector<bool>* model_out = nullptr);

// Parses and solves a DIMACS file; throws ParseError on malformed input.
RunReport run_single(const std::string& path, const RunConfig& cfg, DratWriter* drat = nullptr,
                     std::vector<bool>* model_out = nullptr);

struct BatchResult {
    std::vector<RunReport> rows;         // instance-major, config order within
    std::vector<RunConfig> configs;      // echoed for the summary block
    std::vector<std::string> warnings;   // files skipped and why
};

// Runs each instance under every config. Up to `jobs` solvers run
// concurrently, each fully isolated; rows are merged in (instance, config)
// order regardless of completion order. Unreadable files are skipped with a
// warning.
BatchResult run_batch(const std::vector<std::string>& paths,
                      const std::vector<RunConfig>& configs, int jobs = 1);

// All regular files under `dir` with a .cnf extension, sorted by name.
std::vector<std::string> list_cnf_files(const std::string& dir);

// CSV layout (schema redsat-bench-csv v1):
//   # schema: ... comment header
//   data header + one row per report
//   # summary
//   summary header + one row per config: solved/sat/unsat counts and average
//   cpu time over solved instances only (empty when nothing was solved).
void write_csv(std::ostream& out, const BatchResult& result);

}  // namespace redsat::bench
