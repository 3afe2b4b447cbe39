#include "invdisc/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "invdisc/discrete_invariants.hpp"

namespace invdisc {

double PolyCoeffs::operator()(double t) const noexcept {
    double acc = 0.0;
    for (int k = degree; k >= 0; --k) acc = acc * t + c[static_cast<std::size_t>(k)];
    return acc;
}

double PolyCoeffs::derivative(double t) const noexcept {
    double acc = 0.0;
    for (int k = degree; k >= 1; --k) acc = acc * t + k * c[static_cast<std::size_t>(k)];
    return acc;
}

PolyCoeffs reduce_degree(PolyCoeffs p) {
    p.degree = std::clamp(p.degree, 0, 3);
    double scale = 0.0;
    for (int k = 0; k <= p.degree; ++k) scale = std::max(scale, std::abs(p.c[static_cast<std::size_t>(k)]));
    while (p.degree > 0 && is_vanishing(p.c[static_cast<std::size_t>(p.degree)], scale)) {
        p.c[static_cast<std::size_t>(p.degree)] = 0.0;
        --p.degree;
    }
    return p;
}

int discriminant_sign(const PolyCoeffs& p) {
    auto sign = [](double v) { return (v > 0.0) - (v < 0.0); };
    switch (p.degree) {
        case 2: return sign(p.c[1] * p.c[1] - 4.0 * p.c[2] * p.c[0]);
        case 3: {
            const double a = p.c[3], b = p.c[2], c = p.c[1], d = p.c[0];
            return sign(18.0 * a * b * c * d - 4.0 * b * b * b * d + b * b * c * c - 4.0 * a * c * c * c -
                        27.0 * a * a * d * d);
        }
        default: return 1;
    }
}

namespace {

// Newton steps on the original polynomial, kept only while the residual drops.
double polish(const PolyCoeffs& p, double t) {
    double best = t;
    double best_res = std::abs(p(t));
    for (int it = 0; it < 6 && best_res > 0.0; ++it) {
        const double dp = p.derivative(best);
        if (dp == 0.0 || !std::isfinite(dp)) break;
        const double next = best - p(best) / dp;
        const double res = std::abs(p(next));
        if (!std::isfinite(next) || !(res < best_res)) break;
        best = next;
        best_res = res;
    }
    return best;
}

std::vector<double> quadratic_roots(double a, double b, double c) {
    const double disc = b * b - 4.0 * a * c;
    const double disc_scale = std::max(b * b, std::abs(4.0 * a * c));
    if (disc < 0.0) {
        if (disc >= -4.0 * std::numeric_limits<double>::epsilon() * disc_scale) {
            return {-b / (2.0 * a)};
        }
        return {};
    }
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (b + std::copysign(sq, b));
    if (q == 0.0) return {0.0, 0.0};
    return {q / a, c / q};
}

std::vector<double> cubic_roots(double a3, double a2, double a1, double a0) {
    const double A = a2 / a3;
    const double B = a1 / a3;
    const double C = a0 / a3;
    const double Q = (A * A - 3.0 * B) / 9.0;
    const double R = (2.0 * A * A * A - 9.0 * A * B + 27.0 * C) / 54.0;
    const double Q3 = Q * Q * Q;
    if (R * R < Q3) {
        const double theta = std::acos(std::clamp(R / std::sqrt(Q3), -1.0, 1.0));
        const double m = -2.0 * std::sqrt(Q);
        const double third = A / 3.0;
        return {m * std::cos(theta / 3.0) - third,
                m * std::cos((theta + 2.0 * std::numbers::pi) / 3.0) - third,
                m * std::cos((theta - 2.0 * std::numbers::pi) / 3.0) - third};
    }
    const double big = -std::copysign(std::cbrt(std::abs(R) + std::sqrt(R * R - Q3)), R);
    const double small = (big == 0.0) ? 0.0 : Q / big;
    const double r = big + small - A / 3.0;
    // The remaining pair comes from deflation; it is real only when the
    // quadratic factor has a nonnegative discriminant (the Q^3 = R^2 edge).
    const double q2 = a3;
    const double q1 = a2 + a3 * r;
    const double q0 = a1 + q1 * r;
    std::vector<double> out{r};
    for (double extra : quadratic_roots(q2, q1, q0)) out.push_back(extra);
    return out;
}

}  // namespace

std::vector<double> solve_poly(const PolyCoeffs& p) {
    std::vector<double> roots;
    switch (p.degree) {
        case 1:
            if (p.c[1] != 0.0) roots.push_back(-p.c[0] / p.c[1]);
            break;
        case 2:
            roots = quadratic_roots(p.c[2], p.c[1], p.c[0]);
            break;
        case 3:
            roots = cubic_roots(p.c[3], p.c[2], p.c[1], p.c[0]);
            break;
        default:
            throw Error(ErrorKind::InvalidArgument, "solve_poly handles degree 1 to 3");
    }
    for (double& r : roots) r = polish(p, r);
    std::erase_if(roots, [](double r) { return !std::isfinite(r); });
    std::sort(roots.begin(), roots.end());
    return roots;
}

double extrapolate(std::span<const Point> trailing, double x_next, int order) {
    if (trailing.empty()) throw Error(ErrorKind::InvalidArgument, "nothing to extrapolate from");
    const std::size_t n = std::min(trailing.size(), static_cast<std::size_t>(std::max(order, 0)) + 1);
    const auto pts = trailing.last(n);
    double value = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double w = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) w *= (x_next - pts[j].x) / (pts[i].x - pts[j].x);
        }
        value += w * pts[i].y;
    }
    return value;
}

std::optional<double> select_root(std::span<const double> roots, double prediction,
                                  RootSelection selection) {
    if (roots.empty()) return std::nullopt;
    switch (selection) {
        case RootSelection::SmallestReal: return *std::min_element(roots.begin(), roots.end());
        case RootSelection::LargestReal: return *std::max_element(roots.begin(), roots.end());
        case RootSelection::NearestToPrediction: break;
    }
    double best = roots[0];
    double best_dist = std::abs(roots[0] - prediction);
    for (double r : roots.subspan(1)) {
        const double dist = std::abs(r - prediction);
        const double tie_band = 1e-12 * (std::abs(prediction) + std::max(dist, best_dist));
        if (std::abs(dist - best_dist) <= tie_band) {
            if (r < best) {
                best = r;
                best_dist = dist;
            }
        } else if (dist < best_dist) {
            best = r;
            best_dist = dist;
        }
    }
    return best;
}

}  // namespace invdisc
