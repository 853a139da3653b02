// Copyright (c) braidkit contributors.
// SPDX-License-Identifier: Apache-2.0

#include "braidkit/cli.hpp"

#include <CLI11.hpp>

int main(int argc, char** argv) {
    CLI::App app{"braidkit: exact checks and actions for R-matrix braided algebras"};
    app.require_subcommand(1);

    braidkit::CliOptions opts;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--preset", opts.preset, "built-in input: su2-euclidean, su2-minkowski, identity, permutation");
        cmd->add_option("--rmatrix", opts.rmatrix_file, "R-matrix JSON file (overrides --preset)");
        cmd->add_option("--metric", opts.metric_file, "metric JSON file");
        cmd->add_flag("--json", opts.json, "machine-readable report output");
    };

    CLI::App* check = app.add_subcommand("check", "structural checks on the input matrix");
    add_common(check);

    std::string gen_spec, monomial;
    CLI::App* act = app.add_subcommand("act", "apply a generator to a polynomial and print the reduced result");
    add_common(act);
    act->add_option("generator", gen_spec, "generator spec: p#, c#, l+#_#, l-#_#, sig, sig^-1")->required();
    act->add_option("polynomial", monomial, "polynomial in the x-grammar, e.g. \"x1.x2 + (q)*x3\"")->required();
    act->add_flag("--conjugate", opts.conjugate, "use the conjugate conformal action");
    act->add_flag("--spinorial", opts.spinorial, "use the spinorial conformal action");
    act->add_flag("--q1", opts.q1, "print the q=1 limit of the result");

    std::string suite = "all";
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify);
    verify->add_option("suite", suite,
                       "one of: relations, module-algebra, metric, gaussian, conjugation, classical-limit, all");
    verify->add_option("--degree", opts.degree, "normal-word degree cap (default 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (check->parsed()) return braidkit::cmd_check(opts, std::cout, std::cerr);
    if (act->parsed()) return braidkit::cmd_act(opts, gen_spec, monomial, std::cout, std::cerr);
    return braidkit::cmd_verify(opts, suite, std::cout, std::cerr);
}
