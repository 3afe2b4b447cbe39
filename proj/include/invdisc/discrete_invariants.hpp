#pragma once

// Difference invariants of the projective groups acting on x, on y, and on
// both: cross-ratios, the L family (SL_y(2)), the M family (SL_x(2)), the
// joint fifth-order invariant, and the lattice coefficients W and W_x.
//
// Every routine throws Error(DegenerateCoefficient) when a denominator factor
// vanishes relative to the local scale of the data it was built from.

#include <algorithm>
#include <array>
#include <cmath>
#include <span>

#include "invdisc/core.hpp"

namespace invdisc {

/// Relative threshold below which a denominator factor counts as zero.
inline constexpr double degeneracy_tolerance = 1e-13;

/// |d| <= tolerance * scale. A zero scale makes every factor vanish.
inline bool is_vanishing(double d, double scale) noexcept {
    return !(std::abs(d) > degeneracy_tolerance * std::abs(scale));
}

struct CrossRatioWindow {
    double a0 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
};

/// ((a3 - a1)(a2 - a0)) / ((a3 - a2)(a1 - a0)).
double cross_ratio(const CrossRatioWindow& w);

CrossRatioWindow x_window(std::span<const Point> pts, std::size_t first = 0);
CrossRatioWindow y_window(std::span<const Point> pts, std::size_t first = 0);

/// SL_y(2) invariants on 4, 5 and 6 points; continuous limits J3, J4 and
/// J5 + W0 J3^2.
double l3(std::span<const Point> s);
double l4(std::span<const Point> s);
double l5(std::span<const Point> s);

/// SL_x(2) invariants on 4, 5 and 6 points; continuous limits K3, K4 and
/// K5 - W_x0 K3^2.
double m3(std::span<const Point> s);
double m4(std::span<const Point> s);
double m5(std::span<const Point> s);

struct QTriple {
    double q3 = 0.0;
    double q4 = 0.0;
    double q5 = 0.0;
};

/// Q_i = 1 - R_i / S_i for the three 4-point windows of a 6-point stencil.
QTriple q_triple(std::span<const Point> s);

/// Joint SL_x(2) x SL_y(2) invariant on 6 points, valid on any lattice.
double h5_discrete(std::span<const Point> s);

/// The joint invariant specialised to a uniform lattice (all S_i = 4).
double h5_uniform(double r3, double r4, double r5);

/// Lattice coefficient W of the fifth-order SL_y(2) limit.
double w_coefficient(std::span<const double, 6> x);

/// Lattice coefficient W_x from the five spacings of a 6-point stencil.
double wx_coefficient(std::span<const double, 5> h);

}  // namespace invdisc

namespace invdisc {

/// The fourth entry a3 of a window (a0, a1, a2, a3) whose cross-ratio equals
/// K is linear-fractional in the data: a3 = a2 + numerator / denominator.
/// `scale` is the magnitude against which a vanishing denominator is judged.
struct CrossRatioCompletion {
    double numerator = 0.0;
    double denominator = 0.0;
    double scale = 0.0;
};

inline CrossRatioCompletion complete_cross_ratio(double a0, double a1, double a2, double K) {
    const double d20 = a2 - a0;
    const double d10 = a1 - a0;
    const double d21 = a2 - a1;
    return {d21 * d20, K * d10 - d20, std::max(std::abs(d20), std::abs(K * d10))};
}

}  // namespace invdisc
