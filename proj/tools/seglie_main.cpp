#include <CLI11.hpp>
#include <iostream>

#include "seglie/driver.hpp"

using namespace seglie;

namespace {

int finish(const RunResult& r) {
    std::cout << r.stdout_text;
    std::cerr << r.stderr_text;
    return r.exit_code;
}

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& input) {
    cmd->add_option("input", input, "input file path, or - for stdin")->required();
    cmd->add_option("--cap", cfg.cap, "series degree cap");
    cmd->add_option("--seed", cfg.seed, "seed for generic-point sampling");
    cmd->add_option("--rmax", cfg.rmax, "prolongation iteration cap");
    cmd->add_option("--point", cfg.point, "base point, comma-separated rationals");
    cmd->add_option("--epsilon", cfg.epsilons, "deformation sample (repeatable)");
    cmd->add_option("--oracle-degree", cfg.oracle_degree, "polynomial-solution oracle degree");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Segre-family PDE systems, Lie determining equations, and finite-type analysis"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string input;
    std::string expr_text;
    int pn = 1, pm = 1, porder = 2;

    auto* cparse = app.add_subcommand("parse", "canonicalize a jet expression");
    cparse->add_option("expression", expr_text, "expression text")->required();

    auto* cprolong = app.add_subcommand("prolong", "print symbolic prolongation coefficients");
    cprolong->add_option("--n", pn, "independent variable count");
    cprolong->add_option("--m", pm, "dependent variable count");
    cprolong->add_option("--order", porder, "prolongation order (1 or 2)");

    auto* csegre = app.add_subcommand("segre", "derive the Segre-family PDE system");
    add_common(csegre, cfg, input);
    auto* cinv = app.add_subcommand("involutive", "cross-derivative compatibility check");
    add_common(cinv, cfg, input);
    auto* clie = app.add_subcommand("lie-eqs", "generate the Lie determining equations");
    add_common(clie, cfg, input);
    auto* canalyze = app.add_subcommand("analyze", "determining equations + finite type + dimension bound");
    add_common(canalyze, cfg, input);
    auto* cflat = app.add_subcommand("flat-dim", "flat system with relations: nondegeneracy and bound");
    add_common(cflat, cfg, input);
    auto* cdeform = app.add_subcommand("deform-check", "scale-deformation monotonicity report");
    add_common(cdeform, cfg, input);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cparse->parsed()) return finish(run_parse(expr_text));
        if (cprolong->parsed()) return finish(run_prolong(pn, pm, porder));
        if (csegre->parsed()) return finish(run_segre(input, cfg));
        if (cinv->parsed()) return finish(run_involutive(input, cfg));
        if (clie->parsed()) return finish(run_lie_eqs(input, cfg));
        if (canalyze->parsed()) return finish(run_analyze(input, cfg));
        if (cflat->parsed()) return finish(run_flat_dim(input, cfg));
        if (cdeform->parsed()) return finish(run_deform_check(input, cfg));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
