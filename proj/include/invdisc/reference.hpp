#pragma once

// Baselines and oracles: the ODEs of the worked examples, a classical
// fixed-step fourth-order Runge-Kutta integrator, closed-form solutions with
// exact jets, and the chi deviation estimator.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invdisc/core.hpp"

namespace invdisc {

/// y^(order) = rhs(x, (y, y', ..., y^(order-1))).
struct OdeSystem {
    std::string name;
    int order = 3;
    std::function<double(double, std::span<const double>)> rhs;
    /// Optional denominator of rhs; RK4 stops when it vanishes or changes sign.
    std::function<double(std::span<const double>)> singular_factor;
};

/// J4 = cos x.
OdeSystem example1_system();
/// K3 = c, i.e. y''' = c y'^3 + 3/2 y''^2 / y'.
OdeSystem example2_system(double c);
/// K3 = y.
OdeSystem example3_system();
/// H5 = c solved for y''''' (singular where y'^3 (2 y' y''' - 3 y''^2) = 0).
OdeSystem example5_system(double c);

/// Largest |y| (or any state component) accepted before a blow-up stop.
inline constexpr double rk4_blowup_limit = 1e300;

/// Classical RK4 on the first-order system. Records every `record_every`-th
/// node (the initial node always). Stops with NonFinite when the state
/// leaves the finite range or the singular factor crosses zero within a
/// step, Completed after n steps.
Trajectory rk4_integrate(const OdeSystem& sys, std::span<const double> init, double x0, double h, int n,
                         int record_every = 1);

enum class ExactKind { LogAbs, Arctanh, OneOverOneMinusExp, TanReciprocal, GeneralArctanh };

/// Closed-form solutions. GeneralArctanh is c3 + sqrt(2/c) atanh(c1 x + c2),
/// the general solution of K3 = c.
struct ExactSolution {
    ExactKind kind = ExactKind::LogAbs;
    double c1 = 1.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double c = 2.0;
};

std::string_view to_string(ExactKind kind);
/// Ids: log-abs, arctanh, one-over-one-minus-exp, tan-reciprocal.
std::optional<ExactSolution> parse_exact_solution(std::string_view id);

/// Throws Error(DomainError) at a singularity of the solution.
double exact_eval(const ExactSolution& sol, double x);
Jet exact_jet(const ExactSolution& sol, double x);

/// sqrt(sum (cand - ref)^2 / sum ref^2). Lengths must match.
double chi(std::span<const double> candidate, std::span<const double> reference);
double chi(const Trajectory& candidate, std::span<const double> reference);

/// Ordinates of a trajectory.
std::vector<double> ordinates(const Trajectory& traj);

}  // namespace invdisc
