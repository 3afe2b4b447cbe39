#pragma once

// Invariant difference schemes. Each step solves the scheme's invariant
// equation for the ordinate of the next lattice node, given the trailing
// points; the abscissa comes from the uniform lattice x_n = x_0 + n h.
//
//   SLy4 : L4 = f(x_mid)          (linear in y_n; SL_y(2) invariant)
//   SLx3 : M3 = c or M3 = y       (quadratic or cubic in y_n; SL_x(2))
//   H5   : H5 (uniform form) = c  (linear in y_n; SL_x(2) x SL_y(2))

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "invdisc/core.hpp"
#include "invdisc/poly.hpp"

namespace invdisc {

/// Magnitude above which a new ordinate is reported as NonFinite.
inline constexpr double overflow_limit = 1e300;

struct StepDiagnostics {
    int degree = 0;
    std::vector<double> roots;   // real roots for y_n, ascending
    int selected = -1;           // index into roots, -1 if none
    double prediction = std::numeric_limits<double>::quiet_NaN();
};

struct StepOutcome {
    std::variant<Point, StopReason> result;
    StepDiagnostics diagnostics;

    bool advanced() const noexcept { return std::holds_alternative<Point>(result); }
    const Point& point() const { return std::get<Point>(result); }
    StopReason stop() const { return std::get<StopReason>(result); }
};

StepOutcome sly4_step(std::span<const Point> prev4, double x_next,
                      const std::function<double(double)>& forcing);

/// The cleared scheme polynomial in u = y_n - y_{n-1} (before degree reduction).
PolyCoeffs slx3_polynomial(std::span<const Point> prev3, const ForcingTerm& forcing,
                           RhsEvalPolicy rhs_eval);

StepOutcome slx3_step(std::span<const Point> prev3, double x_next, const ForcingTerm& forcing,
                      RhsEvalPolicy rhs_eval, const RootPolicy& policy);

StepOutcome h5_step(std::span<const Point> prev5, double x_next, double c,
                    const RootPolicy& policy = {});

/// Repeats the scheme's step from the seed. Stops with Completed after
/// n_steps new points, UserLimit when the next node would pass x_stop, or
/// the step's own stop reason. The returned points include the seed.
/// Throws Error(InvalidArgument) if the seed does not fit the spec.
Trajectory integrate(const SchemeSpec& spec, const Stencil& seed, int n_steps,
                     std::optional<double> x_stop = std::nullopt);

}  // namespace invdisc
