#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "pentagram/error.hpp"

namespace pentagram::cli {

struct Options {
    std::string input_file;        // polygon JSON path (empty when --random)
    std::optional<int> random_n;   // generate the input instead of reading it
    std::uint64_t seed = 0;
    double tol = 1e-9;
    int k_max = 50;
    bool renormalize = true;
    std::optional<bool> reproject; // default: on when k_max > 10
    std::string out_path;

    // orbit
    std::string map = "S";
    std::string svg_path;
    std::string csv_path;

    // experiment
    int n = 5;
    int trials = 100;
};

// Exit codes: 0 success, 1 usage/input error, 2 geometric degeneracy,
// 3 solver non-convergence.
int exit_code_for(const Error& e);

int run_check(const Options& opts, std::ostream& out, std::ostream& err);
int run_orbit(const Options& opts, std::ostream& out, std::ostream& err);
int run_solve(const Options& opts, std::ostream& out, std::ostream& err);
int run_experiment(const Options& opts, std::ostream& out, std::ostream& err);

} // namespace pentagram::cli
