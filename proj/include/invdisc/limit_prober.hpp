#pragma once

// Numerical check of the continuous limits: evaluate a difference invariant on
// shrinking stencils cut from a smooth function and compare with the matching
// differential invariant computed from the exact jet.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "invdisc/core.hpp"
#include "invdisc/reference.hpp"

namespace invdisc {

enum class ProbeInvariant { L3, L4, L5, M3, M4, M5, H5 };

std::string_view to_string(ProbeInvariant inv);
std::optional<ProbeInvariant> parse_probe_invariant(std::string_view text);

/// Number of stencil points the discrete invariant consumes.
std::size_t probe_arity(ProbeInvariant inv);

/// A smooth function with its exact jet.
struct TestFunction {
    std::string name;
    std::function<double(double)> eval;
    std::function<Jet(double)> jet;
};

TestFunction test_function(const ExactSolution& sol);
/// y = e^x.
TestFunction exp_test_function();
/// base + eps x^3.
TestFunction cubic_perturbation(const TestFunction& base, double eps);
/// Ids: exp, log-abs, arctanh, one-over-one-minus-exp, tan-reciprocal, and
/// perturbed-one-over-one-minus-exp (plus x^3 / 10).
std::optional<TestFunction> named_test_function(std::string_view id);

/// Stencil x_k = x_c + h t_k with t_0 = 0 and t_k - t_{k-1} = alphas[k-1]
/// (all 1 when alphas is empty).
struct ScaledLattice {
    std::vector<double> alphas;
};

/// Rescaled x_m = 1/(A m + B): t_k = (1/B - 1/(A k + B)) B (A + B) / A, so t_1 = 1.
struct Sol2Lattice {
    double A = 1.0;
    double B = 6.0;
};

using ProbeLattice = std::variant<ScaledLattice, Sol2Lattice>;

struct LimitProbe {
    ProbeInvariant invariant = ProbeInvariant::L3;
    TestFunction function;
    double x_center = 0.0;
    double h0 = 1e-2;
    double ratio = 0.5;
    int levels = 6;
    ProbeLattice lattice = ScaledLattice{};
};

struct LimitReport {
    std::vector<double> h;
    std::vector<double> values;
    std::vector<double> targets;
    std::vector<double> errors;
    /// Levels used for the order fit (those before the roundoff floor).
    int fit_levels = 0;
    /// False when the error sequence stops decreasing before the last level.
    bool monotone = true;
    double estimated_order = 0.0;
    /// Richardson extrapolation of the values over the last two fitted levels.
    double limit_value = 0.0;
    /// Target at the finest level.
    double target = 0.0;
};

/// Unit-spacing stencil offsets t_k for the lattice.
std::vector<double> probe_offsets(const ProbeLattice& lattice, std::size_t n);

/// The differential target on the given stencil abscissae, including the
/// lattice corrections W (l5, h5) and W_x (m5).
double probe_target(ProbeInvariant inv, const Jet& jet, std::span<const double> xs);

/// Throws Error(InvalidArgument) for fewer than 4 levels or ratio outside
/// (0, 1); propagates DegenerateCoefficient from the invariants.
LimitReport probe_limit(const LimitProbe& p);

}  // namespace invdisc
