// Random 3-CNF generator for building SATLIB-style corpora, e.g.
//   gencnf --vars 100 --clauses 430 --count 500 --seed 1 --out corpus/uf100
// writes corpus/uf100/gen100-430-0001.cnf ... using one derived seed per
// instance so corpora are reproducible from (seed, count) alone.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "redsat/dimacs.hpp"
#include "redsat/oracle.hpp"

int main(int argc, char** argv) {
    CLI::App app{"gencnf: reproducible random 3-CNF instances"};
    int vars = 50;
    int clauses = 218;
    int count = 1;
    uint32_t seed = 1;
    std::string out_dir = ".";
    std::string prefix;
    app.add_option("--vars", vars, "variables per instance")->check(CLI::PositiveNumber);
    app.add_option("--clauses", clauses, "clauses per instance")->check(CLI::PositiveNumber);
    app.add_option("--count", count, "number of instances")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "base seed; instance i uses seed + i");
    app.add_option("--out", out_dir, "output directory (created if missing)");
    app.add_option("--prefix", prefix, "file prefix (default genV-C)");
    CLI11_PARSE(app, argc, argv);

    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    if (prefix.empty())
        prefix = "gen" + std::to_string(vars) + "-" + std::to_string(clauses);

    for (int i = 0; i < count; ++i) {
        redsat::Instance inst =
            redsat::oracle::gen_random_3cnf(vars, clauses, seed + static_cast<uint32_t>(i));
        char name[64];
        std::snprintf(name, sizeof(name), "%s-%04d.cnf", prefix.c_str(), i + 1);
        fs::path path = fs::path(out_dir) / name;
        std::ofstream out(path);
        if (!out) {
            std::cerr << "error: cannot write " << path << "\n";
            return 1;
        }
        redsat::write_dimacs(inst, out);
    }
    std::cerr << count << " instances -> " << out_dir << "\n";
    return 0;
}
