#pragma once

// Real roots of the degree <= 3 polynomials produced by clearing
// denominators in the nonlinear schemes, and branch selection among them.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "invdisc/core.hpp"

namespace invdisc {

/// c[0] + c[1] t + c[2] t^2 + c[3] t^3, with c[degree] the leading term.
struct PolyCoeffs {
    int degree = 1;
    std::array<double, 4> c{};

    double operator()(double t) const noexcept;
    double derivative(double t) const noexcept;
};

/// Drops leading coefficients that vanish against the largest coefficient.
/// A result of degree 0 means the equation has no unknown left.
PolyCoeffs reduce_degree(PolyCoeffs p);

/// Sign of the discriminant (+1 distinct real roots, 0 repeated, -1 complex pair).
int discriminant_sign(const PolyCoeffs& p);

/// All real roots in ascending order, each Newton-polished on the original
/// coefficients. An empty result means only complex roots.
std::vector<double> solve_poly(const PolyCoeffs& p);

/// Degree-`order` Lagrange extrapolation of the trailing points to x_next.
double extrapolate(std::span<const Point> trailing, double x_next, int order);

/// Picks one root according to the policy. Ties in distance go to the
/// smaller root. Empty input gives nullopt.
std::optional<double> select_root(std::span<const double> roots, double prediction,
                                  RootSelection selection);

}  // namespace invdisc
