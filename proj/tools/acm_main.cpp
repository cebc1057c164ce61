// almost-commuting-matrices toolkit: gen | pair | family | sweep

#include <CLI11.hpp>

#include "acm/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Commuting approximants for almost-commuting Hermitian matrices"};
    app.require_subcommand(1);

    acm::PairCmdOptions pair_opts;
    CLI::App* pair = app.add_subcommand("pair", "approximate a pair and verify the bounds");
    pair->add_option("--input", pair_opts.input, "matrix file with at least two matrices")
        ->required();
    pair->add_option("--output", pair_opts.output, "result document path (also writes <path>.report.txt)");
    pair->add_option("--basis", pair_opts.basis, "matrix basis in the output: rotated|original")
        ->check(CLI::IsMember({"rotated", "original"}));
    pair->add_flag("--force", pair_opts.force, "run outside the guaranteed parameter regime");
    pair->add_option("--delta-floor", pair_opts.delta_floor,
                     "parameter floor for near-commuting input");

    acm::FamilyCmdOptions family_opts;
    CLI::App* family = app.add_subcommand("family", "approximate a family of operators");
    family->add_option("--input", family_opts.input, "matrix file with the operator family")
        ->required();
    family->add_option("--output", family_opts.output, "result document path");
    family->add_option("--basis", family_opts.basis, "matrix basis in the output: rotated|original")
        ->check(CLI::IsMember({"rotated", "original"}));
    family->add_flag("--force", family_opts.force, "run outside the guaranteed parameter regime");
    family->add_flag("--analytic", family_opts.analytic,
                     "per-iteration parameters from the worst-case recursion");
    family->add_option("--delta-floor", family_opts.delta_floor,
                       "parameter floor for near-commuting input");

    acm::SweepCmdOptions sweep_opts;
    CLI::App* sweep = app.add_subcommand("sweep", "seeded random sweep emitting CSV");
    sweep->add_option("--n", sweep_opts.n_list, "matrix dimensions (repeatable)")->required();
    sweep->add_option("--epsilon", sweep_opts.epsilons, "noise levels (repeatable)")->required();
    sweep->add_option("--p", sweep_opts.p, "operators per family");
    sweep->add_option("--trials", sweep_opts.trials, "trials per (n, epsilon) cell");
    sweep->add_option("--seed", sweep_opts.seed, "base seed");
    sweep->add_option("--output", sweep_opts.output, "CSV path")->required();
    sweep->add_flag("--force", sweep_opts.force, "run outside the guaranteed parameter regime");
    sweep->add_flag("--analytic", sweep_opts.analytic,
                    "per-iteration parameters from the worst-case recursion");
    sweep->add_option("--delta-floor", sweep_opts.delta_floor,
                      "parameter floor for near-commuting input");

    acm::GenCmdOptions gen_opts;
    CLI::App* gen = app.add_subcommand("gen", "generate a seeded random family");
    gen->add_option("--n", gen_opts.n, "matrix dimension");
    gen->add_option("--p", gen_opts.p, "number of operators");
    gen->add_option("--epsilon", gen_opts.epsilon, "noise level");
    gen->add_option("--seed", gen_opts.seed, "base seed");
    gen->add_option("--output", gen_opts.output, "matrix file path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;  // usage errors share the generic-failure exit code
    }

    if (pair->parsed()) return acm::cmd_pair(pair_opts);
    if (family->parsed()) return acm::cmd_family(family_opts);
    if (sweep->parsed()) return acm::cmd_sweep(sweep_opts);
    return acm::cmd_gen(gen_opts);
}
