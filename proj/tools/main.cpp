#include <iostream>

#include <CLI11.hpp>

#include "cli_commands.hpp"

namespace {

void add_common(CLI::App* cmd, pentagram::cli::Options& opts, bool* no_renorm, bool* no_reproj) {
    cmd->add_option("file", opts.input_file, "polygon JSON file {\"vertices\": [[x,y],...]}");
    cmd->add_option("--random", opts.random_n, "generate a random convex n-gon instead")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opts.seed, "random seed");
    cmd->add_option("--tol", opts.tol, "tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--kmax", opts.k_max, "iteration budget")->check(CLI::PositiveNumber);
    cmd->add_flag("--no-renormalize", *no_renorm, "keep raw coordinates along orbits");
    cmd->add_flag("--no-reproject", *no_reproj, "disable per-step re-projection");
    cmd->add_option("--out", opts.out_path, "output path");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"inverse pentagram map dynamics: checks, orbits, variety solving, experiments"};
    app.require_subcommand(1);

    pentagram::cli::Options opts;
    bool no_renorm = false;
    bool no_reproj = false;

    CLI::App* check = app.add_subcommand("check", "d-vector, Glick affinity, horizon, concentricity");
    add_common(check, opts, &no_renorm, &no_reproj);

    CLI::App* orbit = app.add_subcommand("orbit", "iterate S or D, write CSV/SVG");
    add_common(orbit, opts, &no_renorm, &no_reproj);
    orbit->add_option("--map", opts.map, "S (inverse) or D (pentagram)");
    orbit->add_option("--svg", opts.svg_path, "SVG strip output path");
    orbit->add_option("--csv", opts.csv_path, "orbit CSV output path");

    CLI::App* solve = app.add_subcommand("solve", "project onto the variety d_P = 0");
    add_common(solve, opts, &no_renorm, &no_reproj);

    CLI::App* experiment = app.add_subcommand("experiment", "random vs variety horizon trials");
    add_common(experiment, opts, &no_renorm, &no_reproj);
    experiment->add_option("--n", opts.n, "polygon size")->check(CLI::PositiveNumber);
    experiment->add_option("--trials", opts.trials, "number of trials")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    opts.renormalize = !no_renorm;
    if (no_reproj)
        opts.reproject = false;

    if (check->parsed())
        return pentagram::cli::run_check(opts, std::cout, std::cerr);
    if (orbit->parsed())
        return pentagram::cli::run_orbit(opts, std::cout, std::cerr);
    if (solve->parsed())
        return pentagram::cli::run_solve(opts, std::cout, std::cerr);
    if (experiment->parsed())
        return pentagram::cli::run_experiment(opts, std::cout, std::cerr);
    return 1;
}
