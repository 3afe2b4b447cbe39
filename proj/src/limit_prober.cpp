#include "invdisc/limit_prober.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "invdisc/differential_invariants.hpp"
#include "invdisc/discrete_invariants.hpp"

namespace invdisc {

namespace {

constexpr std::array<std::string_view, 7> invariant_names{"l3", "l4", "l5", "m3", "m4", "m5", "h5"};

double evaluate(ProbeInvariant inv, std::span<const Point> s) {
    switch (inv) {
        case ProbeInvariant::L3: return l3(s);
        case ProbeInvariant::L4: return l4(s);
        case ProbeInvariant::L5: return l5(s);
        case ProbeInvariant::M3: return m3(s);
        case ProbeInvariant::M4: return m4(s);
        case ProbeInvariant::M5: return m5(s);
        case ProbeInvariant::H5: return h5_discrete(s);
    }
    return 0.0;
}

// Least-squares slope of log e against log h.
double fit_order(std::span<const double> h, std::span<const double> e) {
    const auto n = static_cast<double>(h.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const double lx = std::log(h[i]);
        const double ly = std::log(e[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

std::string_view to_string(ProbeInvariant inv) { return invariant_names[static_cast<std::size_t>(inv)]; }

std::optional<ProbeInvariant> parse_probe_invariant(std::string_view text) {
    for (std::size_t i = 0; i < invariant_names.size(); ++i) {
        if (invariant_names[i] == text) return static_cast<ProbeInvariant>(i);
    }
    return std::nullopt;
}

std::size_t probe_arity(ProbeInvariant inv) {
    switch (inv) {
        case ProbeInvariant::L3:
        case ProbeInvariant::M3: return 4;
        case ProbeInvariant::L4:
        case ProbeInvariant::M4: return 5;
        default: return 6;
    }
}

TestFunction test_function(const ExactSolution& sol) {
    return {std::string(to_string(sol.kind)), [sol](double x) { return exact_eval(sol, x); },
            [sol](double x) { return exact_jet(sol, x); }};
}

TestFunction exp_test_function() {
    return {"exp", [](double x) { return std::exp(x); },
            [](double x) {
                Jet j;
                j.x = x;
                j.d.fill(std::exp(x));
                return j;
            }};
}

TestFunction cubic_perturbation(const TestFunction& base, double eps) {
    return {"perturbed-" + base.name, [base, eps](double x) { return base.eval(x) + eps * x * x * x; },
            [base, eps](double x) {
                Jet j = base.jet(x);
                j.d[0] += eps * x * x * x;
                j.d[1] += 3.0 * eps * x * x;
                j.d[2] += 6.0 * eps * x;
                j.d[3] += 6.0 * eps;
                return j;
            }};
}

std::optional<TestFunction> named_test_function(std::string_view id) {
    if (id == "exp") return exp_test_function();
    if (id == "perturbed-one-over-one-minus-exp") {
        return cubic_perturbation(test_function(ExactSolution{ExactKind::OneOverOneMinusExp}), 0.1);
    }
    if (auto sol = parse_exact_solution(id)) return test_function(*sol);
    return std::nullopt;
}

std::vector<double> probe_offsets(const ProbeLattice& lattice, std::size_t n) {
    std::vector<double> t(n, 0.0);
    if (const auto* s = std::get_if<ScaledLattice>(&lattice)) {
        if (!s->alphas.empty() && s->alphas.size() + 1 < n) {
            throw Error(ErrorKind::InvalidArgument, "need one spacing multiplier per stencil gap");
        }
        for (std::size_t k = 1; k < n; ++k) {
            const double a = s->alphas.empty() ? 1.0 : s->alphas[k - 1];
            if (!(a > 0.0)) throw Error(ErrorKind::InvalidArgument, "spacing multipliers must be positive");
            t[k] = t[k - 1] + a;
        }
        return t;
    }
    const auto& r = std::get<Sol2Lattice>(lattice);
    if (r.A == 0.0 || r.B == 0.0) throw Error(ErrorKind::InvalidArgument, "sol2 lattice needs A, B nonzero");
    for (std::size_t k = 0; k < n; ++k) {
        const double den = r.A * static_cast<double>(k) + r.B;
        if (den == 0.0) throw Error(ErrorKind::InvalidArgument, "sol2 lattice passes through infinity");
        t[k] = (1.0 / r.B - 1.0 / den) * r.B * (r.A + r.B) / r.A;
    }
    for (std::size_t k = 1; k < n; ++k) {
        if (!(t[k] > t[k - 1])) throw Error(ErrorKind::InvalidArgument, "sol2 lattice is not increasing");
    }
    return t;
}

double probe_target(ProbeInvariant inv, const Jet& jet, std::span<const double> xs) {
    if (xs.size() != probe_arity(inv)) throw Error(ErrorKind::InvalidArgument, "stencil size mismatch");
    switch (inv) {
        case ProbeInvariant::L3: return jy_invariants(jet).third;
        case ProbeInvariant::L4: return jy_invariants(jet).fourth;
        case ProbeInvariant::L5: {
            const auto j = jy_invariants(jet);
            return j.fifth + w_coefficient(xs.first<6>()) * j.third * j.third;
        }
        case ProbeInvariant::M3: return kx_invariants(jet).third;
        case ProbeInvariant::M4: return kx_invariants(jet).fourth;
        case ProbeInvariant::M5: {
            const auto k = kx_invariants(jet);
            std::array<double, 5> h{};
            for (std::size_t i = 0; i < 5; ++i) h[i] = xs[i + 1] - xs[i];
            return k.fifth - wx_coefficient(h) * k.third * k.third;
        }
        case ProbeInvariant::H5: {
            std::array<double, 5> h{};
            for (std::size_t i = 0; i < 5; ++i) h[i] = xs[i + 1] - xs[i];
            const double factor = h[4] * h[0] / (h[3] * h[1]);
            return factor * (h5_differential(jet) + w_coefficient(xs.first<6>()));
        }
    }
    return 0.0;
}

LimitReport probe_limit(const LimitProbe& p) {
    if (p.levels < 4) throw Error(ErrorKind::InvalidArgument, "a limit probe needs at least 4 levels");
    if (!(p.ratio > 0.0 && p.ratio < 1.0)) throw Error(ErrorKind::InvalidArgument, "ratio must lie in (0, 1)");
    if (!(p.h0 > 0.0)) throw Error(ErrorKind::InvalidArgument, "h0 must be positive");
    if (!p.function.eval || !p.function.jet) throw Error(ErrorKind::InvalidArgument, "probe has no test function");

    const std::size_t n = probe_arity(p.invariant);
    const auto t = probe_offsets(p.lattice, n);
    const Jet jet = p.function.jet(p.x_center);

    LimitReport rep;
    double h = p.h0;
    std::vector<double> xs(n);
    std::vector<Point> pts(n);
    for (int level = 0; level < p.levels; ++level, h *= p.ratio) {
        for (std::size_t k = 0; k < n; ++k) {
            xs[k] = p.x_center + h * t[k];
            pts[k] = {xs[k], p.function.eval(xs[k])};
        }
        const double value = evaluate(p.invariant, pts);
        const double target = probe_target(p.invariant, jet, xs);
        rep.h.push_back(h);
        rep.values.push_back(value);
        rep.targets.push_back(target);
        rep.errors.push_back(std::abs(value - target));
    }
    rep.target = rep.targets.back();

    // Fit only the strictly decreasing head of the error sequence.
    std::size_t used = 1;
    while (used < rep.errors.size() && rep.errors[used] < rep.errors[used - 1] && rep.errors[used] > 0.0) ++used;
    rep.monotone = used == rep.errors.size();
    rep.fit_levels = static_cast<int>(used);
    if (used >= 2 && rep.errors[0] > 0.0) {
        rep.estimated_order = fit_order(std::span(rep.h).first(used), std::span(rep.errors).first(used));
    } else {
        rep.estimated_order = std::numeric_limits<double>::quiet_NaN();
    }

    rep.limit_value = rep.values[used - 1];
    if (used >= 2 && std::isfinite(rep.estimated_order) && rep.estimated_order > 0.0) {
        const double rp = std::pow(rep.h[used - 1] / rep.h[used - 2], rep.estimated_order);
        rep.limit_value = (rep.values[used - 1] - rp * rep.values[used - 2]) / (1.0 - rp);
    }
    return rep;
}

}  // namespace invdisc
