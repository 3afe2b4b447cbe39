#include "invdisc/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "invdisc/discrete_invariants.hpp"

namespace invdisc {

std::vector<double> uniform_lattice(double x0, double h, int n) {
    if (!(h != 0.0) || !std::isfinite(h) || !std::isfinite(x0)) {
        throw Error(ErrorKind::InvalidArgument, "uniform lattice needs finite x0 and nonzero h");
    }
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "uniform lattice needs n >= 1");
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) xs[static_cast<std::size_t>(k)] = x0 + k * h;
    return xs;
}

double extend_constant_s(double x_a, double x_b, double x_c, double K) {
    const double seed_scale = std::max({std::abs(x_b - x_a), std::abs(x_c - x_b), std::abs(x_c - x_a)});
    if (is_vanishing(x_b - x_a, seed_scale) || is_vanishing(x_c - x_b, seed_scale) ||
        is_vanishing(x_c - x_a, seed_scale)) {
        throw Error(ErrorKind::InvalidArgument, "lattice seeds must be distinct");
    }
    const auto c = complete_cross_ratio(x_a, x_b, x_c, K);
    if (is_vanishing(c.denominator, c.scale)) {
        throw Error(ErrorKind::DegenerateCoefficient, "cross-ratio K is resonant for these seeds");
    }
    return x_c + c.numerator / c.denominator;
}

std::vector<double> constant_s_lattice(const ConstantSLattice& rule, int n) {
    if (!(rule.K != 0.0)) throw Error(ErrorKind::InvalidArgument, "lattice cross-ratio K must be nonzero");
    const auto& s = rule.seed;
    const bool increasing = s[1] > s[0] && s[2] > s[1];
    const bool decreasing = s[1] < s[0] && s[2] < s[1];
    if (!increasing && !decreasing) {
        throw Error(ErrorKind::InvalidArgument, "lattice seed must be strictly monotone");
    }
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "lattice needs n >= 1");
    std::vector<double> xs(s.begin(), s.begin() + std::min(n, 3));
    while (static_cast<int>(xs.size()) < n) {
        const std::size_t m = xs.size();
        xs.push_back(extend_constant_s(xs[m - 3], xs[m - 2], xs[m - 1], rule.K));
    }
    return xs;
}

std::vector<double> reciprocal_lattice(double A, double B, double C, int n) {
    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int m = 0; m < n; ++m) {
        const double den = A * m + B;
        if (den == 0.0) throw Error(ErrorKind::DegenerateCoefficient, "reciprocal lattice hits its pole");
        xs.push_back(1.0 / den + C);
    }
    return xs;
}

double w0_sol2(double A, double B) {
    const double den = (A + B) * (2.0 * A + B) * (3.0 * A + B) * (4.0 * A + B);
    const double scale = std::pow(std::max(std::abs(A), std::abs(B)), 4);
    if (is_vanishing(den, scale)) throw Error(ErrorKind::DegenerateCoefficient, "W0 denominator vanishes");
    return 2.0 * A * A * (8.0 * A * A - 5.0 * A * B - B * B) / den;
}

}  // namespace invdisc
