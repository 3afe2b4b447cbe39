#include <CLI11.hpp>

#include <ostream>

#include "invdisc/cli.hpp"

namespace invdisc::cli {

namespace {

// Flags shared by the subcommands; each lands in RunConfig only when given.
struct Flags {
    std::string config;
    RunConfig cfg;
};

template <class T>
void option(CLI::App& app, const std::string& name, std::optional<T>& slot, const std::string& help) {
    app.add_option_function<T>(name, [&slot](const T& v) { slot = v; }, help);
}

void scheme_flags(CLI::App& app, Flags& f) {
    option(app, "--h", f.cfg.h, "Lattice step (negative integrates backwards)");
    option(app, "--steps", f.cfg.steps, "Number of steps after the seed");
    option(app, "--x0", f.cfg.x0, "Initial abscissa");
    option(app, "--c", f.cfg.c, "Constant on the right-hand side");
    option(app, "--scheme", f.cfg.scheme, "sly4, slx3 or h5");
    option(app, "--forcing", f.cfg.forcing, "constant, y, cos, sin, zero or one");
    option(app, "--rhs-eval", f.cfg.rhs_eval, "new-point or stencil-mean");
    option(app, "--root-policy", f.cfg.root_policy, "nearest, smallest or largest");
    option(app, "--seed", f.cfg.seed, "Seed CSV file or closed-form solution id");
    option(app, "--out", f.cfg.out, "Output path (prefix for example)");
    app.add_option("--config", f.config, "key = value configuration file");
}

RunConfig resolve(const Flags& f) {
    if (f.config.empty()) return f.cfg;
    return merge(load_config(f.config), f.cfg);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariant difference schemes for SL(2)-invariant ODEs", "invdisc"};
    // --h is the step size, so help is long-form only (inherited by subcommands).
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    Flags f;
    std::string chi_a;
    std::string chi_b;

    auto* example = app.add_subcommand("example", "Run one of the worked examples against RK4");
    example->add_option_function<std::string>("id", [&f](const std::string& v) { f.cfg.example = v; },
                                              "1, 2-log, 2-arctanh, 3, 4 or 5");
    scheme_flags(*example, f);

    auto* solve = app.add_subcommand("solve", "Integrate with an invariant scheme");
    scheme_flags(*solve, f);

    auto* chi = app.add_subcommand("chi", "Relative deviation between two trajectories");
    chi->add_option("a", chi_a, "Candidate CSV")->required();
    chi->add_option("b", chi_b, "Reference CSV or closed-form solution id")->required();

    auto* limit = app.add_subcommand("limit", "Probe the continuous limit of a difference invariant");
    option(*limit, "--invariant", f.cfg.invariant, "l3, l4, l5, m3, m4, m5 or h5");
    option(*limit, "--function", f.cfg.function, "Test function id");
    option(*limit, "--x0", f.cfg.x0, "Stencil base point");
    option(*limit, "--h", f.cfg.h, "First-level spacing");
    option(*limit, "--levels", f.cfg.levels, "Number of levels (at least 4)");
    option(*limit, "--ratio", f.cfg.ratio, "Spacing ratio between levels, in (0, 1)");
    option(*limit, "--lattice", f.cfg.lattice, "uniform, sol2:A,B or alphas:a1,...");
    limit->add_option("--config", f.config, "key = value configuration file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Prints help (to out) or the parse diagnostic (to err).
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        if (chi->parsed()) return cmd_chi(chi_a, chi_b, out);
        const RunConfig cfg = resolve(f);
        if (example->parsed()) return cmd_example(cfg, out);
        if (solve->parsed()) return cmd_solve(cfg, out);
        return cmd_limit(cfg, out);
    } catch (const IoError& e) {
        err << "invdisc: " << e.what() << '\n';
        return exit_io;
    } catch (const ConfigError& e) {
        err << "invdisc: " << e.what() << '\n';
        return exit_config;
    } catch (const Error& e) {
        err << "invdisc: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_config;
    }
}

}  // namespace invdisc::cli
