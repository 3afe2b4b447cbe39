#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <utility>
#include <vector>

#include "invdisc/differential_invariants.hpp"
#include "invdisc/discrete_invariants.hpp"
#include "invdisc/lattice.hpp"
#include "invdisc/limit_prober.hpp"
#include "invdisc/reference.hpp"
#include "invdisc/schemes.hpp"

namespace py = pybind11;
using namespace invdisc;

namespace {

using Pairs = std::vector<std::pair<double, double>>;

std::vector<Point> to_points(const Pairs& p) {
    std::vector<Point> out;
    out.reserve(p.size());
    for (const auto& [x, y] : p) out.push_back({x, y});
    return out;
}

Pairs to_pairs(const std::vector<Point>& p) {
    Pairs out;
    out.reserve(p.size());
    for (const auto& q : p) out.emplace_back(q.x, q.y);
    return out;
}

template <double (*F)(std::span<const Point>)>
double on_points(const Pairs& p) {
    const auto pts = to_points(p);
    return F(pts);
}

Jet to_jet(double x, const std::array<double, 6>& d) { return Jet{x, d}; }

ExactSolution exact_of(const std::string& id) {
    const auto s = parse_exact_solution(id);
    if (!s) throw py::value_error("unknown exact solution '" + id + "'");
    return *s;
}

template <class T>
T parsed(const std::optional<T>& v, const std::string& what, const std::string& text) {
    if (!v) throw py::value_error("unknown " + what + " '" + text + "'");
    return *v;
}

py::tuple solve(const std::string& scheme, const Pairs& seed, double h, int steps, const std::string& forcing,
                double c, const std::string& root_policy, const std::string& rhs_eval,
                std::optional<double> x_stop) {
    SchemeSpec spec;
    spec.scheme = parsed(parse_scheme_kind(scheme), "scheme", scheme);
    spec.lattice = UniformLattice{h};
    spec.root_policy.selection = parsed(parse_root_selection(root_policy), "root policy", root_policy);
    spec.rhs_eval = parsed(parse_rhs_eval(rhs_eval), "rhs evaluation", rhs_eval);
    if (forcing == "constant") {
        spec.forcing = ConstantForcing{c};
    } else if (forcing == "y") {
        spec.forcing = IdentityInY{};
    } else {
        spec.forcing = parsed(named_forcing(forcing), "forcing", forcing);
    }
    const Trajectory t = integrate(spec, Stencil(to_points(seed)), steps, x_stop);
    return py::make_tuple(to_pairs(t.points), std::string(to_string(t.stop)));
}

py::tuple rk4(int example, const std::vector<double>& init, double x0, double h, int n, double c) {
    OdeSystem sys;
    switch (example) {
        case 1: sys = example1_system(); break;
        case 2: sys = example2_system(c); break;
        case 3: sys = example3_system(); break;
        case 5: sys = example5_system(c); break;
        default: throw py::value_error("examples with an ODE are 1, 2, 3 and 5");
    }
    const Trajectory t = rk4_integrate(sys, init, x0, h, n);
    return py::make_tuple(to_pairs(t.points), std::string(to_string(t.stop)));
}

py::dict probe(const std::string& invariant, const std::string& function, double x0, double h0, double ratio,
               int levels) {
    LimitProbe p;
    p.invariant = parsed(parse_probe_invariant(invariant), "invariant", invariant);
    p.function = parsed(named_test_function(function), "test function", function);
    p.x_center = x0;
    p.h0 = h0;
    p.ratio = ratio;
    p.levels = levels;
    const LimitReport r = probe_limit(p);
    py::dict d;
    d["h"] = r.h;
    d["values"] = r.values;
    d["targets"] = r.targets;
    d["errors"] = r.errors;
    d["fit_levels"] = r.fit_levels;
    d["monotone"] = r.monotone;
    d["estimated_order"] = r.estimated_order;
    d["limit_value"] = r.limit_value;
    d["target"] = r.target;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Invariant difference schemes for SL(2)-invariant ODEs.";

    static py::exception<Error> error(m, "InvdiscError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    m.def("cross_ratio", [](double a0, double a1, double a2, double a3) { return cross_ratio({a0, a1, a2, a3}); });
    m.def("l3", &on_points<l3>, py::arg("points"));
    m.def("l4", &on_points<l4>, py::arg("points"));
    m.def("l5", &on_points<l5>, py::arg("points"));
    m.def("m3", &on_points<m3>, py::arg("points"));
    m.def("m4", &on_points<m4>, py::arg("points"));
    m.def("m5", &on_points<m5>, py::arg("points"));
    m.def("h5_discrete", &on_points<h5_discrete>, py::arg("points"));
    m.def("h5_uniform", &h5_uniform, py::arg("r3"), py::arg("r4"), py::arg("r5"));
    m.def("w_coefficient", [](const std::array<double, 6>& x) { return w_coefficient(x); });
    m.def("wx_coefficient", [](const std::array<double, 5>& h) { return wx_coefficient(h); });
    m.def("w0_sol2", &w0_sol2, py::arg("A"), py::arg("B"));

    m.def(
        "jy_invariants",
        [](double x, const std::array<double, 6>& d) {
            const auto j = jy_invariants(to_jet(x, d));
            return py::make_tuple(j.third, j.fourth, j.fifth);
        },
        py::arg("x"), py::arg("jet"), "(J3, J4, J5) from the jet (y, y', ..., y''''').");
    m.def(
        "kx_invariants",
        [](double x, const std::array<double, 6>& d) {
            const auto k = kx_invariants(to_jet(x, d));
            return py::make_tuple(k.third, k.fourth, k.fifth);
        },
        py::arg("x"), py::arg("jet"));
    m.def("h5_differential", [](double x, const std::array<double, 6>& d) { return h5_differential(to_jet(x, d)); },
          py::arg("x"), py::arg("jet"));

    m.def("exact_eval", [](const std::string& id, double x) { return exact_eval(exact_of(id), x); }, py::arg("id"),
          py::arg("x"));
    m.def("exact_jet", [](const std::string& id, double x) { return exact_jet(exact_of(id), x).d; }, py::arg("id"),
          py::arg("x"));
    m.def("chi", [](const std::vector<double>& a, const std::vector<double>& b) { return chi(a, b); },
          py::arg("candidate"), py::arg("reference"));

    m.def("solve", &solve, py::arg("scheme"), py::arg("seed"), py::arg("h"), py::arg("steps"),
          py::arg("forcing") = "constant", py::arg("c") = 0.0, py::arg("root_policy") = "nearest",
          py::arg("rhs_eval") = "new-point", py::arg("x_stop") = py::none(),
          "Integrate an invariant scheme from (x, y) seed points. Returns (points, stop reason).");
    m.def("rk4", &rk4, py::arg("example"), py::arg("init"), py::arg("x0"), py::arg("h"), py::arg("n"),
          py::arg("c") = 0.0);
    m.def("probe_limit", &probe, py::arg("invariant"), py::arg("function"), py::arg("x0") = 0.0,
          py::arg("h0") = 0.05, py::arg("ratio") = 0.5, py::arg("levels") = 5);
}
