#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "invdisc/cli.hpp"
#include "invdisc/discrete_invariants.hpp"
#include "invdisc/limit_prober.hpp"
#include "invdisc/reference.hpp"
#include "invdisc/schemes.hpp"

namespace invdisc::cli {

namespace {

using Summary = std::vector<std::pair<std::string, std::string>>;

// Fine RK4 step used to build reference trajectories and reference seeds.
constexpr double reference_step = 1e-5;

std::string format_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

template <class T>
T require(const std::optional<T>& v, const char* key) {
    if (!v) throw ConfigError(std::string("missing required parameter '") + key + "'");
    return *v;
}

void reject(bool present, const std::string& what) {
    if (present) throw ConfigError(what);
}

int steps_or(const RunConfig& cfg, int fallback) {
    const int steps = cfg.steps.value_or(fallback);
    if (steps < 0) throw ConfigError("steps must be nonnegative");
    return steps;
}

double nonzero_h(double h) {
    if (!(h != 0.0) || !std::isfinite(h)) throw ConfigError("h must be finite and nonzero");
    return h;
}

// RK4 with a fine internal step, sampled every `h`.
Trajectory rk4_sampled(const OdeSystem& sys, std::span<const double> init, double x0, double h, int nodes) {
    const int sub = std::max(1, static_cast<int>(std::lround(std::abs(h) / reference_step)));
    Trajectory t = rk4_integrate(sys, init, x0, h / sub, (nodes - 1) * sub, sub);
    t.h_nominal = h;
    // The integrator accumulates x0 + k h_ref; snap to the coarse lattice.
    for (std::size_t k = 0; k < t.points.size(); ++k) t.points[k].x = x0 + static_cast<double>(k) * h;
    return t;
}

std::array<double, 5> jet_init(const ExactSolution& sol, double x, int order) {
    const Jet j = exact_jet(sol, x);
    std::array<double, 5> init{};
    for (int k = 0; k < order; ++k) init[static_cast<std::size_t>(k)] = j.d[static_cast<std::size_t>(k)];
    return init;
}

// chi of the trajectory against the exact solution, skipping singular nodes.
double chi_against(const Trajectory& traj, const ExactSolution& sol) {
    std::vector<double> cand;
    std::vector<double> ref;
    for (const auto& p : traj.points) {
        try {
            ref.push_back(exact_eval(sol, p.x));
            cand.push_back(p.y);
        } catch (const Error&) {
        }
    }
    return chi(cand, ref);
}

double max_error_against(const Trajectory& traj, const ExactSolution& sol,
                         double min_abs_x = 0.0) {
    double worst = 0.0;
    for (const auto& p : traj.points) {
        if (std::abs(p.x) < min_abs_x) continue;
        try {
            worst = std::max(worst, std::abs(p.y - exact_eval(sol, p.x)));
        } catch (const Error&) {
        }
    }
    return worst;
}

// Value at the node closest to x, when one lies within h/2.
std::optional<double> value_at(const Trajectory& traj, double x) {
    for (const auto& p : traj.points) {
        if (std::abs(p.x - x) <= 0.5 * std::abs(traj.h_nominal)) return p.y;
    }
    return std::nullopt;
}

void describe_run(Summary& s, const std::string& prefix, const Trajectory& t) {
    s.emplace_back(prefix + "_stop", std::string(to_string(t.stop)));
    s.emplace_back(prefix + "_points", std::to_string(t.points.size()));
    s.emplace_back(prefix + "_last_x", format_real(t.points.back().x));
    s.emplace_back(prefix + "_last_y", format_real(t.points.back().y));
}

struct ExampleResult {
    Trajectory invariant;
    Trajectory rk4;
    Summary summary;
};

RootPolicy root_policy(const RunConfig& cfg) {
    RootPolicy p;
    if (cfg.root_policy) {
        const auto sel = parse_root_selection(*cfg.root_policy);
        if (!sel) throw ConfigError("unknown root policy '" + *cfg.root_policy + "'");
        p.selection = *sel;
    }
    return p;
}

RhsEvalPolicy rhs_eval(const RunConfig& cfg) {
    if (!cfg.rhs_eval) return RhsEvalPolicy::NewPoint;
    const auto r = parse_rhs_eval(*cfg.rhs_eval);
    if (!r) throw ConfigError("unknown rhs evaluation '" + *cfg.rhs_eval + "'");
    return *r;
}

void reject_scheme_overrides(const RunConfig& cfg, const std::string& id) {
    reject(cfg.scheme.has_value(), "example " + id + " fixes the scheme");
    reject(cfg.forcing.has_value(), "example " + id + " fixes the forcing");
    reject(cfg.seed.has_value(), "example " + id + " builds its own seed");
}

ExampleResult example1(const RunConfig& cfg) {
    reject_scheme_overrides(cfg, "1");
    reject(cfg.c.has_value() || cfg.x0.has_value(), "example 1 takes neither c nor x0");
    const double h = nonzero_h(cfg.h.value_or(0.1));
    if (h < 0.0) throw ConfigError("example 1 integrates forward; h must be positive");
    const int nodes = static_cast<int>(std::lround(1.5 / h)) + 1;
    const int steps = steps_or(cfg, std::max(0, nodes - 4));

    const double init[4] = {1.0, -1.0, -2.5, 5.0};
    ExampleResult r;
    r.rk4 = rk4_sampled(example1_system(), init, 1.0, h, std::max(nodes, steps + 4));

    SchemeSpec spec;
    spec.scheme = SchemeKind::SLy4;
    spec.forcing = *named_forcing("cos");
    spec.lattice = UniformLattice{h};
    if (r.rk4.points.size() < 4) throw ConfigError("reference solve failed before the seed was complete");
    r.invariant = integrate(spec, Stencil({r.rk4.points.begin(), r.rk4.points.begin() + 4}), steps);

    r.summary.emplace_back("equation", "J4 = cos x");
    for (double x : {1.5, 2.0, 2.5}) {
        if (auto v = value_at(r.invariant, x)) r.summary.emplace_back("invariant_y(" + format_short(x) + ")", format_short(*v));
        if (auto v = value_at(r.rk4, x)) r.summary.emplace_back("rk4_y(" + format_short(x) + ")", format_short(*v));
    }
    const std::size_t common = std::min(r.invariant.points.size(), r.rk4.points.size());
    const auto a = ordinates(r.invariant);
    const auto b = ordinates(r.rk4);
    r.summary.emplace_back("chi_invariant_vs_rk4",
                           format_short(chi(std::span(a).first(common), std::span(b).first(common))));
    return r;
}

ExampleResult example2(const RunConfig& cfg, bool log_case) {
    const std::string id = log_case ? "2-log" : "2-arctanh";
    reject_scheme_overrides(cfg, id);
    ExactSolution sol;
    double c = 0.5;
    double x0 = 0.0;
    double h = 0.0;
    int steps = 0;
    if (log_case) {
        reject(cfg.c.has_value() && *cfg.c != 0.5, "example 2-log is the c = 1/2 equation");
        sol = ExactSolution{ExactKind::LogAbs};
        x0 = cfg.x0.value_or(-1.0);
        if (x0 == 0.0) throw ConfigError("log|x| is singular at x0 = 0");
        h = nonzero_h(cfg.h.value_or(x0 < 0.0 ? 1e-4 : -1e-4));
        steps = steps_or(cfg, static_cast<int>(std::lround(2.0 * std::abs(x0) / std::abs(h))));
    } else {
        c = cfg.c.value_or(2.0);
        if (!(c > 0.0)) throw ConfigError("example 2-arctanh needs c > 0");
        sol = ExactSolution{ExactKind::GeneralArctanh, 1.0, 0.0, 0.0, c};
        x0 = cfg.x0.value_or(-0.9);
        h = nonzero_h(cfg.h.value_or(0.01));
        const double span = 2.0 * std::abs(x0);
        steps = steps_or(cfg, std::max(0, static_cast<int>(std::lround(span / std::abs(h))) - 2));
    }

    ExampleResult r;
    SchemeSpec spec;
    spec.scheme = SchemeKind::SLx3;
    spec.forcing = ConstantForcing{c};
    spec.lattice = UniformLattice{h};
    spec.root_policy = root_policy(cfg);
    spec.rhs_eval = rhs_eval(cfg);
    const Stencil seed = seed_stencil_from_function([&](double x) { return exact_eval(sol, x); }, x0, h, 3);
    r.invariant = integrate(spec, seed, steps);

    const auto init = jet_init(sol, x0, 3);
    r.rk4 = rk4_integrate(example2_system(c), std::span(init).first(3), x0, h, steps + 2);

    r.summary.emplace_back("equation", "K3 = " + format_short(c));
    r.summary.emplace_back("exact_solution", log_case ? "log|x|" : "sqrt(2/c) atanh(x)");
    r.summary.emplace_back("chi_invariant_vs_exact", format_short(chi_against(r.invariant, sol)));
    r.summary.emplace_back("chi_rk4_vs_exact", format_short(chi_against(r.rk4, sol)));
    if (log_case) {
        r.summary.emplace_back("max_abs_error_invariant(|x|>=0.01)",
                               format_short(max_error_against(r.invariant, sol, 0.01)));
    } else {
        r.summary.emplace_back("max_abs_error_invariant", format_short(max_error_against(r.invariant, sol)));
    }
    return r;
}

ExampleResult example3(const RunConfig& cfg) {
    reject_scheme_overrides(cfg, "3");
    reject(cfg.c.has_value() || cfg.x0.has_value(), "example 3 takes neither c nor x0");
    const double h = nonzero_h(cfg.h.value_or(1e-3));
    const int steps = steps_or(cfg, static_cast<int>(std::lround(2.0 / std::abs(h))));
    const double init[3] = {10.0, -1.0, -10.0};

    ExampleResult r;
    const Trajectory ref = rk4_sampled(example3_system(), init, 0.0, h, 3);
    if (ref.points.size() < 3) throw ConfigError("reference solve failed before the seed was complete");
    SchemeSpec spec;
    spec.scheme = SchemeKind::SLx3;
    spec.forcing = IdentityInY{};
    spec.lattice = UniformLattice{h};
    spec.root_policy = root_policy(cfg);
    spec.rhs_eval = rhs_eval(cfg);
    r.invariant = integrate(spec, Stencil(ref.points), steps);
    r.rk4 = rk4_integrate(example3_system(), init, 0.0, h, steps + 2);

    r.summary.emplace_back("equation", "K3 = y");
    r.summary.emplace_back("rhs_eval", std::string(to_string(spec.rhs_eval)));
    return r;
}

ExampleResult example4(const RunConfig& cfg) {
    reject_scheme_overrides(cfg, "4");
    reject(cfg.c.has_value() && *cfg.c != 0.0, "example 4 is the c = 0 equation");
    const ExactSolution sol{ExactKind::OneOverOneMinusExp};
    const double x0 = cfg.x0.value_or(-1.0);
    const double h = nonzero_h(cfg.h.value_or(0.1));
    const int steps = steps_or(cfg, 40);

    ExampleResult r;
    SchemeSpec spec;
    spec.scheme = SchemeKind::H5Scheme;
    spec.forcing = ConstantForcing{0.0};
    spec.lattice = UniformLattice{h};
    const Stencil seed = seed_stencil_from_function([&](double x) { return exact_eval(sol, x); }, x0, h, 5);
    r.invariant = integrate(spec, seed, steps);
    const auto init = jet_init(sol, x0, 5);
    r.rk4 = rk4_integrate(example5_system(0.0), init, x0, h, steps + 4);

    // The exact solution has constant cross-ratio 2 + e^h + e^-h on the lattice.
    const double rho = 2.0 + std::exp(h) + std::exp(-h);
    double worst_r = 0.0;
    for (std::size_t i = 0; i + 4 <= r.invariant.points.size(); ++i) {
        const std::span<const Point> w(r.invariant.points.data() + i, 4);
        worst_r = std::max(worst_r, std::abs(cross_ratio(y_window(w, 0)) - rho));
    }
    const double worst = max_error_against(r.invariant, sol);
    r.summary.emplace_back("equation", "H5 = 0");
    r.summary.emplace_back("max_abs_error_invariant", format_short(worst));
    r.summary.emplace_back("max_cross_ratio_deviation", format_short(worst_r));
    r.summary.emplace_back("exact_discrete_solution", worst <= 1e-9 && worst_r <= 1e-10 ? "yes" : "no");
    r.summary.emplace_back("chi_rk4_vs_exact", format_short(chi_against(r.rk4, sol)));
    return r;
}

ExampleResult example5(const RunConfig& cfg) {
    reject_scheme_overrides(cfg, "5");
    reject(cfg.c.has_value() && *cfg.c != 0.0, "example 5 is the c = 0 equation");
    const ExactSolution sol{ExactKind::TanReciprocal};
    const double x0 = cfg.x0.value_or(0.1);
    const double h = nonzero_h(cfg.h.value_or(1e-3));
    const int steps = steps_or(cfg, static_cast<int>(std::lround(0.1 / std::abs(h))));

    ExampleResult r;
    SchemeSpec spec;
    spec.scheme = SchemeKind::H5Scheme;
    spec.forcing = ConstantForcing{0.0};
    spec.lattice = UniformLattice{h};
    const Stencil seed = seed_stencil_from_function([&](double x) { return exact_eval(sol, x); }, x0, h, 5);
    r.invariant = integrate(spec, seed, steps);
    const auto init = jet_init(sol, x0, 5);
    r.rk4 = rk4_integrate(example5_system(0.0), init, x0, h, steps + 4);

    const double pole = 2.0 / (5.0 * std::numbers::pi);
    const bool beyond = std::any_of(r.invariant.points.begin(), r.invariant.points.end(),
                                    [&](const Point& p) { return p.x > pole && std::isfinite(p.y); });
    r.summary.emplace_back("equation", "H5 = 0");
    r.summary.emplace_back("pole", format_short(pole));
    r.summary.emplace_back("invariant_beyond_pole", beyond ? "yes" : "no");
    r.summary.emplace_back("rk4_stopped_before_pole",
                           r.rk4.stop == StopReason::NonFinite && r.rk4.points.back().x <= pole ? "yes" : "no");
    return r;
}

ForcingTerm forcing_from(const RunConfig& cfg) {
    const std::string name = cfg.forcing.value_or("constant");
    if (name == "constant") return ConstantForcing{cfg.c.value_or(0.0)};
    reject(cfg.c.has_value(), "c only applies to constant forcing");
    if (name == "y") return IdentityInY{};
    if (auto f = named_forcing(name)) return *f;
    throw ConfigError("unknown forcing '" + name + "' (constant, y, cos, sin, zero, one)");
}

// Seed from a CSV file, or sampled from a closed-form solution id.
Stencil load_seed(const RunConfig& cfg, std::size_t arity, double& h) {
    const std::string src = require(cfg.seed, "seed");
    if (const auto sol = parse_exact_solution(src); sol && !std::filesystem::exists(src)) {
        if (!cfg.h) throw ConfigError("a closed-form seed needs h");
        const double x0 = require(cfg.x0, "x0");
        return seed_stencil_from_function([&](double x) { return exact_eval(*sol, x); }, x0, h,
                                          static_cast<int>(arity));
    }
    const auto csv = read_csv_file(src);
    if (csv.points.size() < arity) {
        throw ConfigError("seed file has " + std::to_string(csv.points.size()) + " rows, the scheme needs " +
                          std::to_string(arity));
    }
    std::vector<Point> pts(csv.points.begin(), csv.points.begin() + static_cast<std::ptrdiff_t>(arity));
    reject(cfg.x0.has_value() && *cfg.x0 != pts[0].x, "x0 disagrees with the seed file");
    if (!cfg.h) {
        // Mean spacing, rounded to 12 digits to shed the decimal rounding of the file.
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", (pts.back().x - pts.front().x) / static_cast<double>(arity - 1));
        h = std::strtod(buf, nullptr);
    }
    return Stencil(std::move(pts));
}

void print_summary(std::ostream& out, const Summary& s) {
    for (const auto& [k, v] : s) out << k << ": " << v << '\n';
}

}  // namespace

SchemeSpec scheme_spec(const RunConfig& cfg) {
    SchemeSpec spec;
    const auto kind = parse_scheme_kind(require(cfg.scheme, "scheme"));
    if (!kind) throw ConfigError("unknown scheme '" + *cfg.scheme + "' (sly4, slx3, h5)");
    spec.scheme = *kind;
    spec.forcing = forcing_from(cfg);
    spec.root_policy = root_policy(cfg);
    spec.rhs_eval = rhs_eval(cfg);
    if (cfg.h) spec.lattice = UniformLattice{nonzero_h(*cfg.h)};
    return spec;
}

int cmd_example(const RunConfig& cfg, std::ostream& out) {
    const std::string id = require(cfg.example, "example");
    reject(cfg.invariant || cfg.function || cfg.levels || cfg.ratio || cfg.lattice,
           "limit parameters do not apply to examples");
    ExampleResult r;
    if (id == "1") {
        r = example1(cfg);
    } else if (id == "2-log") {
        r = example2(cfg, true);
    } else if (id == "2-arctanh") {
        r = example2(cfg, false);
    } else if (id == "3") {
        r = example3(cfg);
    } else if (id == "4") {
        r = example4(cfg);
    } else if (id == "5") {
        r = example5(cfg);
    } else {
        throw ConfigError("unknown example '" + id + "' (1, 2-log, 2-arctanh, 3, 4, 5)");
    }

    Summary s;
    s.emplace_back("example", id);
    s.emplace_back("scheme", r.invariant.scheme_id);
    s.emplace_back("h", format_real(r.invariant.h_nominal));
    describe_run(s, "invariant", r.invariant);
    describe_run(s, "rk4", r.rk4);
    s.insert(s.end(), r.summary.begin(), r.summary.end());

    const std::string prefix = cfg.out.value_or("example-" + id);
    write_csv_file(prefix + "_invariant.csv", r.invariant, {{"example", id}});
    write_csv_file(prefix + "_rk4.csv", r.rk4, {{"example", id}});
    {
        std::ofstream f(prefix + "_summary.txt");
        if (!f) throw IoError("cannot write " + prefix + "_summary.txt");
        print_summary(f, s);
    }
    print_summary(out, s);
    return exit_ok;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    reject(cfg.example || cfg.invariant || cfg.function || cfg.levels || cfg.ratio || cfg.lattice,
           "solve takes scheme parameters only");
    SchemeSpec spec = scheme_spec(cfg);
    double h = cfg.h.value_or(0.0);
    const Stencil seed = load_seed(cfg, spec.arity(), h);
    spec.lattice = UniformLattice{nonzero_h(h)};
    const Trajectory traj = integrate(spec, seed, steps_or(cfg, 100));
    const Summary extra{{"forcing", describe(spec.forcing)},
                        {"root_policy", std::string(to_string(spec.root_policy.selection))},
                        {"rhs_eval", std::string(to_string(spec.rhs_eval))}};
    if (cfg.out) {
        write_csv_file(*cfg.out, traj, extra);
    } else {
        write_csv(out, traj, extra);
    }
    return exit_ok;
}

int cmd_chi(const std::string& a, const std::string& b, std::ostream& out) {
    const auto cand = read_csv_file(a);
    std::vector<double> ref;
    std::vector<double> ys;
    if (const auto sol = parse_exact_solution(b); sol && !std::filesystem::exists(b)) {
        for (const auto& p : cand.points) {
            ref.push_back(exact_eval(*sol, p.x));
            ys.push_back(p.y);
        }
    } else {
        const auto other = read_csv_file(b);
        if (other.points.size() != cand.points.size()) {
            throw ConfigError("chi needs aligned trajectories (" + std::to_string(cand.points.size()) + " vs " +
                              std::to_string(other.points.size()) + " rows)");
        }
        for (std::size_t i = 0; i < cand.points.size(); ++i) {
            if (std::abs(cand.points[i].x - other.points[i].x) > 1e-9 * (1.0 + std::abs(cand.points[i].x))) {
                throw ConfigError("chi needs aligned abscissae; row " + std::to_string(i) + " differs");
            }
            ys.push_back(cand.points[i].y);
            ref.push_back(other.points[i].y);
        }
    }
    const double value = chi(ys, ref);
    out << (value == 0.0 ? std::string("0.000000") : format_short(value)) << '\n';
    return exit_ok;
}

int cmd_limit(const RunConfig& cfg, std::ostream& out) {
    reject(cfg.example || cfg.scheme || cfg.forcing || cfg.seed || cfg.steps || cfg.c || cfg.rhs_eval ||
               cfg.root_policy,
           "limit takes invariant, function, x0, h, levels, ratio and lattice only");
    LimitProbe p;
    const std::string inv = cfg.invariant.value_or("l3");
    const auto kind = parse_probe_invariant(inv);
    if (!kind) throw ConfigError("unknown invariant '" + inv + "' (l3, l4, l5, m3, m4, m5, h5)");
    p.invariant = *kind;
    const std::string fn = cfg.function.value_or("exp");
    auto f = named_test_function(fn);
    if (!f) throw ConfigError("unknown test function '" + fn + "'");
    p.function = *f;
    p.x_center = cfg.x0.value_or(0.0);
    p.h0 = cfg.h.value_or(1e-2);
    p.levels = cfg.levels.value_or(4);
    p.ratio = cfg.ratio.value_or(0.1);

    const std::string lat = cfg.lattice.value_or("uniform");
    auto numbers_after = [&](std::string_view prefix) {
        std::vector<double> v;
        std::stringstream ss{std::string(lat.substr(prefix.size()))};
        std::string item;
        while (std::getline(ss, item, ',')) {
            double x = 0.0;
            const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
            if (ec != std::errc{} || ptr != item.data() + item.size()) {
                throw ConfigError("bad lattice parameter '" + item + "'");
            }
            v.push_back(x);
        }
        return v;
    };
    if (lat == "uniform") {
        p.lattice = ScaledLattice{};
    } else if (lat.rfind("sol2:", 0) == 0) {
        const auto v = numbers_after("sol2:");
        if (v.size() != 2) throw ConfigError("lattice sol2 expects 'sol2:A,B'");
        p.lattice = Sol2Lattice{v[0], v[1]};
    } else if (lat.rfind("alphas:", 0) == 0) {
        p.lattice = ScaledLattice{numbers_after("alphas:")};
    } else {
        throw ConfigError("unknown lattice '" + lat + "' (uniform, sol2:A,B, alphas:a1,...)");
    }

    const LimitReport r = probe_limit(p);
    out << "# invariant: " << to_string(p.invariant) << '\n';
    out << "# function: " << p.function.name << '\n';
    out << "# x_center: " << format_real(p.x_center) << '\n';
    out << "# lattice: " << lat << '\n';
    out << "level,h,value,target,error\n";
    for (std::size_t i = 0; i < r.h.size(); ++i) {
        out << i << ',' << format_real(r.h[i]) << ',' << format_real(r.values[i]) << ','
            << format_real(r.targets[i]) << ',' << format_real(r.errors[i]) << '\n';
    }
    out << "estimated_order: " << format_short(r.estimated_order) << '\n';
    out << "fit_levels: " << r.fit_levels << '\n';
    out << "monotone: " << (r.monotone ? "yes" : "no") << '\n';
    out << "limit_value: " << format_real(r.limit_value) << '\n';
    out << "target: " << format_real(r.target) << '\n';
    return exit_ok;
}

}  // namespace invdisc::cli
