#include "invdisc/discrete_invariants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace invdisc {

namespace {

[[noreturn]] void degenerate(const char* what) {
    throw Error(ErrorKind::DegenerateCoefficient, std::string(what) + " vanishes");
}

void require_size(std::span<const Point> s, std::size_t n, const char* name) {
    if (s.size() != n) {
        throw Error(ErrorKind::InvalidArgument, std::string(name) + " needs " + std::to_string(n) +
                                                    " points, got " + std::to_string(s.size()));
    }
}

double spread(std::span<const Point> s, double Point::*coord) {
    auto [lo, hi] = std::minmax_element(s.begin(), s.end(), [coord](const Point& a, const Point& b) {
        return a.*coord < b.*coord;
    });
    return (*hi).*coord - (*lo).*coord;
}

double window_spread(const CrossRatioWindow& w) {
    const auto [lo, hi] = std::minmax({w.a0, w.a1, w.a2, w.a3});
    return hi - lo;
}

// 1 - R/S for points [first, first + 4).
double q_value(std::span<const Point> s, std::size_t first) {
    const auto xw = x_window(s, first);
    const double scale = window_spread(xw);
    if (is_vanishing(xw.a3 - xw.a1, scale) || is_vanishing(xw.a2 - xw.a0, scale)) {
        degenerate("abscissa cross-ratio");
    }
    const double S = cross_ratio(xw);
    const double R = cross_ratio(y_window(s, first));
    return 1.0 - R / S;
}

}  // namespace

double cross_ratio(const CrossRatioWindow& w) {
    const double scale = window_spread(w);
    const double d32 = w.a3 - w.a2;
    const double d10 = w.a1 - w.a0;
    if (is_vanishing(d32, scale) || is_vanishing(d10, scale)) {
        degenerate("cross-ratio denominator");
    }
    return ((w.a3 - w.a1) * (w.a2 - w.a0)) / (d32 * d10);
}

CrossRatioWindow x_window(std::span<const Point> pts, std::size_t first) {
    return {pts[first].x, pts[first + 1].x, pts[first + 2].x, pts[first + 3].x};
}

CrossRatioWindow y_window(std::span<const Point> pts, std::size_t first) {
    return {pts[first].y, pts[first + 1].y, pts[first + 2].y, pts[first + 3].y};
}

double l3(std::span<const Point> s) {
    require_size(s, 4, "l3");
    const double scale = spread(s, &Point::x);
    const double d21 = s[2].x - s[1].x;
    const double d30 = s[3].x - s[0].x;
    if (is_vanishing(d21, scale) || is_vanishing(d30, scale)) degenerate("l3 prefactor");
    return 6.0 / (d21 * d30) * q_value(s, 0);
}

double l4(std::span<const Point> s) {
    require_size(s, 5, "l4");
    const double span_x = s[4].x - s[0].x;
    if (is_vanishing(span_x, spread(s, &Point::x))) degenerate("l4 abscissa span");
    return 4.0 / span_x * (l3(s.subspan(1, 4)) - l3(s.subspan(0, 4)));
}

double l5(std::span<const Point> s) {
    require_size(s, 6, "l5");
    const double span_x = s[5].x - s[0].x;
    if (is_vanishing(span_x, spread(s, &Point::x))) degenerate("l5 abscissa span");
    return 5.0 / span_x * (l4(s.subspan(1, 5)) - l4(s.subspan(0, 5)));
}

double m3(std::span<const Point> s) {
    require_size(s, 4, "m3");
    const double scale = spread(s, &Point::y);
    const double d30 = s[3].y - s[0].y;
    const double d21 = s[2].y - s[1].y;
    if (is_vanishing(d30, scale) || is_vanishing(d21, scale)) degenerate("m3 prefactor");
    return 6.0 / (d30 * d21) * q_value(s, 0);
}

double m4(std::span<const Point> s) {
    require_size(s, 5, "m4");
    const double span_y = s[4].y - s[0].y;
    if (is_vanishing(span_y, spread(s, &Point::y))) degenerate("m4 ordinate span");
    return 4.0 / span_y * (m3(s.subspan(1, 4)) - m3(s.subspan(0, 4)));
}

double m5(std::span<const Point> s) {
    require_size(s, 6, "m5");
    const double span_y = s[5].y - s[0].y;
    if (is_vanishing(span_y, spread(s, &Point::y))) degenerate("m5 ordinate span");
    return 5.0 / span_y * (m4(s.subspan(1, 5)) - m4(s.subspan(0, 5)));
}

QTriple q_triple(std::span<const Point> s) {
    require_size(s, 6, "q_triple");
    return {q_value(s, 0), q_value(s, 1), q_value(s, 2)};
}

double h5_discrete(std::span<const Point> s) {
    require_size(s, 6, "h5_discrete");
    const QTriple q = q_triple(s);
    const double S3 = cross_ratio(x_window(s, 0));
    const double S4 = cross_ratio(x_window(s, 1));
    const double S5 = cross_ratio(x_window(s, 2));

    for (double qi : {q.q3, q.q4, q.q5}) {
        if (is_vanishing(qi, 1.0)) degenerate("Q_i (the Schwarzian manifold)");
    }

    const double b1 = S3 * (1.0 - S4) + S4;
    const double b2 = S4 * (1.0 - S5) + S5;
    const double p = S4 * (1.0 - S3) * (1.0 - S5) - S3 * S5;
    if (is_vanishing(b1, std::max(std::abs(S3 * (1.0 - S4)), std::abs(S4)))) {
        degenerate("h5 bracket S3(1-S4)+S4");
    }
    if (is_vanishing(b2, std::max(std::abs(S4 * (1.0 - S5)), std::abs(S5)))) {
        degenerate("h5 bracket S4(1-S5)+S5");
    }
    if (is_vanishing(p, std::max(std::abs(S4 * (1.0 - S3) * (1.0 - S5)), std::abs(S3 * S5)))) {
        degenerate("h5 bracket S4(1-S3)(1-S5)-S3S5");
    }

    const double prefactor = (10.0 / 3.0) * S4 / (b1 * b2 * p);
    const double body = S4 * (1.0 - S5) / q.q5 + S4 * (1.0 - S3) / q.q3 -
                        (1.0 - S4) * p / q.q4 - S4 * (1.0 - S3) * (1.0 - S5) * q.q4 / (q.q3 * q.q5);
    return prefactor * body;
}

double h5_uniform(double r3, double r4, double r5) {
    for (double r : {r3, r4, r5}) {
        if (is_vanishing(r - 4.0, 4.0)) degenerate("R_i - 4 (the Schwarzian manifold)");
    }
    const double num = 16.0 * r5 + r4 * (3.0 * r4 + r5 - 32.0) + r3 * (r4 - 5.0 * r5 + 16.0);
    return num / (2.0 * (r3 - 4.0) * (r4 - 4.0) * (r5 - 4.0));
}

double w_coefficient(std::span<const double, 6> x) {
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    const double scale = *hi - *lo;
    const double d50 = x[5] - x[0];
    const double d40 = x[4] - x[0];
    const double d51 = x[5] - x[1];
    if (is_vanishing(d50, scale) || is_vanishing(d40, scale) || is_vanishing(d51, scale)) {
        degenerate("W denominator");
    }
    return (10.0 / 3.0) * (0.2 - (x[4] - x[3]) / d50 - (x[3] - x[1]) * (x[2] - x[0]) / (d50 * d40) +
                           (x[4] - x[2]) * (x[3] - x[1]) / (d50 * d51));
}

double wx_coefficient(std::span<const double, 5> h) {
    double sum = 0.0;
    double scale = 0.0;
    for (double hi : h) {
        sum += hi;
        scale = std::max(scale, std::abs(hi));
    }
    if (is_vanishing(sum, scale)) degenerate("W_x spacing sum");
    return (20.0 / 6.0) * (0.8 - h[2] / sum);
}

}  // namespace invdisc
