#include <doctest.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "drat_check.hpp"
#include "redsat/bench.hpp"
#include "redsat/oracle.hpp"

using namespace redsat;
namespace fs = std::filesystem;

namespace {

// Scratch directory, fresh per test-process run.
struct TmpDir {
    fs::path path;
    TmpDir() {
        path = fs::temp_directory_path() / ("redsat-bench-test-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TmpDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const Instance& inst) {
        fs::path p = path / name;
        std::ofstream out(p);
        write_dimacs(inst, out);
        return p.string();
    }
    std::string raw(const std::string& name, const std::string& text) {
        fs::path p = path / name;
        std::ofstream out(p);
        out << text;
        return p.string();
    }
};

Instance parse_str(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

std::vector<std::vector<int>> as_dimacs_ints(const Instance& inst) {
    std::vector<std::vector<int>> out;
    for (const auto& c : inst.clauses) {
        std::vector<int> ints;
        for (Lit l : c) ints.push_back(l.to_dimacs());
        out.push_back(std::move(ints));
    }
    for (int i = 0; i < inst.empty_clauses; ++i) out.emplace_back();
    return out;
}

// Blanks the timing fields (data column 6, summary column 7) so CSV outputs
// from two runs can be compared byte-for-byte.
std::string mask_times(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') {
            std::vector<std::string> fields;
            std::string field;
            std::istringstream ls(line);
            while (std::getline(ls, field, ',')) fields.push_back(field);
            if (!line.empty() && line.back() == ',') fields.push_back("");
            if (fields.size() == 14) fields[6] = "T";
            if (fields.size() == 8) fields[7] = "T";
            line.clear();
            for (size_t i = 0; i < fields.size(); ++i) {
                if (i) line += ',';
                line += fields[i];
            }
        }
        out += line;
        out += '\n';
    }
    return out;
}

bench::RunConfig cfg(StrategyKind kind, Schedule schedule = Schedule::Minisat, int k = 0) {
    bench::RunConfig c;
    c.strategy.kind = kind;
    c.strategy.k = k;
    c.schedule = schedule;
    return c;
}

}  // namespace

TEST_SUITE("bench") {
    TEST_CASE("exit codes follow the SAT-competition convention") {
        CHECK(bench::exit_code(Answer::Sat) == 10);
        CHECK(bench::exit_code(Answer::Unsat) == 20);
        CHECK(bench::exit_code(Answer::Unknown) == 0);
    }

    TEST_CASE("run_single: trivial UNSAT, SAT with model, parse failure") {
        TmpDir tmp;
        std::string unsat = tmp.raw("unsat.cnf", "p cnf 1 2\n1 0\n-1 0\n");
        auto report = bench::run_single(unsat, cfg(StrategyKind::Size));
        CHECK(report.answer == Answer::Unsat);
        CHECK(report.stats.conflicts == 0);
        CHECK(report.instance == "unsat.cnf");  // basename, not the path

        Instance sat_inst = oracle::gen_random_3cnf(20, 60, 7);
        REQUIRE(oracle::solve_bruteforce(sat_inst).sat);
        std::string sat = tmp.file("sat.cnf", sat_inst);
        std::vector<bool> model;
        auto report2 = bench::run_single(sat, cfg(StrategyKind::Sbr), nullptr, &model);
        CHECK(report2.answer == Answer::Sat);
        CHECK(oracle::check_model(sat_inst, model));

        std::string bad = tmp.raw("bad.cnf", "p cnf oops\n");
        CHECK_THROWS_AS(bench::run_single(bad, cfg(StrategyKind::Size)), ParseError);
        CHECK_THROWS_AS(bench::run_single((tmp.path / "missing.cnf").string(),
                                          cfg(StrategyKind::Size)),
                        ParseError);
    }

    TEST_CASE("run_single: wall-clock timeout reports UNKNOWN") {
        TmpDir tmp;
        std::string hard = tmp.file("hard.cnf", oracle::gen_random_3cnf(120, 516, 1));
        auto c = cfg(StrategyKind::Size);
        c.timeout_s = 1e-9;
        auto report = bench::run_single(hard, c);
        CHECK(report.answer == Answer::Unknown);
    }

    TEST_CASE("list_cnf_files: .cnf only, sorted by name") {
        TmpDir tmp;
        tmp.raw("b.cnf", "p cnf 1 1\n1 0\n");
        tmp.raw("a.cnf", "p cnf 1 1\n1 0\n");
        tmp.raw("notes.txt", "not a cnf\n");
        auto files = bench::list_cnf_files(tmp.path.string());
        REQUIRE(files.size() == 2);
        CHECK(fs::path(files[0]).filename() == "a.cnf");
        CHECK(fs::path(files[1]).filename() == "b.cnf");
    }

    TEST_CASE("run_batch: instance-major row order across configs") {
        TmpDir tmp;
        std::vector<std::string> paths = {
            tmp.file("i1.cnf", oracle::gen_random_3cnf(20, 60, 7)),    // SAT
            tmp.raw("i2.cnf", "p cnf 2 4\n1 2 0\n1 -2 0\n-1 2 0\n-1 -2 0\n"),  // UNSAT
            tmp.file("i3.cnf", oracle::gen_random_3cnf(20, 60, 8)),    // SAT
        };
        std::vector<bench::RunConfig> configs = {cfg(StrategyKind::Size),
                                                 cfg(StrategyKind::LbdDynamic, Schedule::Glucose)};
        auto batch = bench::run_batch(paths, configs);
        CHECK(batch.warnings.empty());
        REQUIRE(batch.rows.size() == 6);
        const char* expect_inst[] = {"i1.cnf", "i1.cnf", "i2.cnf", "i2.cnf", "i3.cnf", "i3.cnf"};
        for (int i = 0; i < 6; ++i) {
            CHECK(batch.rows[i].instance == expect_inst[i]);
            CHECK(batch.rows[i].strategy.kind == configs[i % 2].strategy.kind);
            CHECK(batch.rows[i].schedule == configs[i % 2].schedule);
        }
        CHECK(batch.rows[2].answer == Answer::Unsat);
        CHECK(batch.rows[3].answer == Answer::Unsat);

        SUBCASE("csv layout and summary counts") {
            std::ostringstream out;
            bench::write_csv(out, batch);
            std::istringstream in(out.str());
            std::vector<std::string> lines;
            std::string line;
            while (std::getline(in, line)) lines.push_back(line);
            REQUIRE(lines.size() == 2 + 6 + 2 + 2);
            CHECK(lines[0] == "# schema: redsat-bench-csv v1");
            CHECK(lines[1] ==
                  "instance,strategy,k,seed,schedule,answer,cpu_s,conflicts,decisions,"
                  "propagations,restarts,reductions,clauses_deleted,peak_learned");
            CHECK(lines[2].rfind("i1.cnf,size,,91648253,minisat,SAT,", 0) == 0);
            CHECK(lines[5].rfind("i2.cnf,lbdd,,91648253,glucose,UNSAT,", 0) == 0);
            CHECK(lines[8] == "# summary");
            CHECK(lines[9] == "strategy,k,seed,schedule,solved,sat,unsat,avg_time_s");
            CHECK(lines[10].rfind("size,,91648253,minisat,3,2,1,", 0) == 0);
            CHECK(lines[11].rfind("lbdd,,91648253,glucose,3,2,1,", 0) == 0);
            CHECK(lines[10].back() != ',');  // avg present: someone solved something
        }

        SUBCASE("csv output is deterministic modulo timing") {
            auto batch2 = bench::run_batch(paths, configs);
            std::ostringstream a, b;
            bench::write_csv(a, batch);
            bench::write_csv(b, batch2);
            CHECK(mask_times(a.str()) == mask_times(b.str()));
        }

        SUBCASE("parallel batch merges rows in the same order") {
            auto batch3 = bench::run_batch(paths, configs, 3);
            std::ostringstream a, b;
            bench::write_csv(a, batch);
            bench::write_csv(b, batch3);
            CHECK(mask_times(a.str()) == mask_times(b.str()));
        }
    }

    TEST_CASE("run_batch: unreadable files are skipped with one warning") {
        TmpDir tmp;
        std::vector<std::string> paths = {
            tmp.raw("good.cnf", "p cnf 1 1\n1 0\n"),
            (tmp.path / "missing.cnf").string(),
        };
        std::vector<bench::RunConfig> configs = {cfg(StrategyKind::Size),
                                                 cfg(StrategyKind::Fifo)};
        auto batch = bench::run_batch(paths, configs);
        REQUIRE(batch.rows.size() == 2);  // good.cnf under both configs
        CHECK(batch.rows[0].instance == "good.cnf");
        REQUIRE(batch.warnings.size() == 1);
        CHECK(batch.warnings[0].find("missing.cnf") != std::string::npos);
        CHECK(batch.warnings[0].rfind("skipped ", 0) == 0);
    }

    TEST_CASE("csv summary: k column and empty average when nothing was solved") {
        TmpDir tmp;
        std::vector<std::string> paths = {
            tmp.file("hard.cnf", oracle::gen_random_3cnf(120, 516, 2))};
        auto c = cfg(StrategyKind::Sbr, Schedule::Minisat, 7);
        c.timeout_s = 1e-9;
        auto batch = bench::run_batch(paths, {c});
        REQUIRE(batch.rows.size() == 1);
        REQUIRE(batch.rows[0].answer == Answer::Unknown);
        std::ostringstream out;
        bench::write_csv(out, batch);
        std::istringstream in(out.str());
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
        REQUIRE(lines.size() == 2 + 1 + 2 + 1);
        CHECK(lines[2].rfind("hard.cnf,sbr,7,91648253,minisat,UNKNOWN,", 0) == 0);
        CHECK(lines[5] == "sbr,7,91648253,minisat,0,0,0,");  // trailing comma: empty avg

        SUBCASE("k defaults are resolved in the csv") {
            auto d = cfg(StrategyKind::GlucoseSbr, Schedule::Glucose);  // k = 0 -> default 15
            Instance tiny = parse_str("p cnf 1 1\n1 0\n");
            auto rep = bench::run_instance(tiny, "t.cnf", d);
            bench::BatchResult br;
            br.rows = {rep};
            br.configs = {d};
            std::ostringstream o;
            bench::write_csv(o, br);
            CHECK(o.str().find("t.cnf,glucose-sbr,15,") != std::string::npos);
        }
    }

    TEST_CASE("drat writer emits the plain-text format") {
        std::ostringstream out;
        DratWriter w(out);
        std::vector<Lit> c1 = {Lit::from_dimacs(-1), Lit::from_dimacs(3)};
        w.add(c1);
        w.del(c1);
        w.add_empty();
        CHECK(out.str() == "-1 3 0\nd -1 3 0\n0\n");
    }

    TEST_CASE("drat checker: accepts valid proofs, rejects bogus ones") {
        SUBCASE("hand-built RUP proof") {
            std::vector<std::vector<int>> f = {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}};
            std::istringstream proof("1 0\nd 1 2 0\n0\n");
            auto r = dratcheck::check_drat(f, proof);
            CHECK(r.accepted);
            CHECK(r.message.empty());
        }
        SUBCASE("satisfiable formula cannot prove the empty clause") {
            std::vector<std::vector<int>> f = {{1, 2}};
            std::istringstream proof("0\n");
            auto r = dratcheck::check_drat(f, proof);
            CHECK(!r.accepted);
            CHECK(r.line == 1);
        }
        SUBCASE("non-RUP addition is rejected") {
            std::vector<std::vector<int>> f = {{1, 2}};
            std::istringstream proof("-1 0\n0\n");
            auto r = dratcheck::check_drat(f, proof);
            CHECK(!r.accepted);
            CHECK(r.line == 1);
        }
        SUBCASE("proof without the empty clause is rejected") {
            std::vector<std::vector<int>> f = {{1}, {-1, 2}};
            std::istringstream proof("2 0\n");
            auto r = dratcheck::check_drat(f, proof);
            CHECK(!r.accepted);
        }
    }

    TEST_CASE("solver proofs on UNSAT instances pass the checker") {
        int checked = 0;
        for (uint32_t seed = 1; seed <= 40 && checked < 6; ++seed) {
            Instance inst = oracle::gen_random_3cnf(16, 110, seed);
            if (oracle::solve_bruteforce(inst).sat) continue;
            ++checked;
            for (auto kind : {StrategyKind::Sbr, StrategyKind::LbdDynamic}) {
                std::ostringstream proof;
                DratWriter w(proof);
                auto schedule = kind == StrategyKind::Sbr ? Schedule::Minisat : Schedule::Glucose;
                auto report = bench::run_instance(inst, "x.cnf", cfg(kind, schedule), &w);
                REQUIRE(report.answer == Answer::Unsat);
                std::istringstream in(proof.str());
                auto r = dratcheck::check_drat(as_dimacs_ints(inst), in);
                CAPTURE(r.line);
                CAPTURE(r.message);
                CHECK(r.accepted);
            }
        }
        CHECK(checked == 6);
    }
}
