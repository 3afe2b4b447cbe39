#include "invdisc/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "invdisc/discrete_invariants.hpp"

namespace invdisc {

namespace {

constexpr double uniform_cross_ratio = 4.0;

StepOutcome stopped(StopReason reason, StepDiagnostics diag = {}) {
    return StepOutcome{reason, std::move(diag)};
}

StepOutcome accept(double x_next, double y_next, StepDiagnostics diag) {
    if (!std::isfinite(y_next) || std::abs(y_next) > overflow_limit) {
        return stopped(StopReason::NonFinite, std::move(diag));
    }
    return StepOutcome{Point{x_next, y_next}, std::move(diag)};
}

// Solves cross_ratio(y_a, y_b, y_c, y_next) = rho for y_next.
StepOutcome complete_ordinate(double y_a, double y_b, double y_c, double rho, double x_next,
                              StepDiagnostics diag) {
    if (!std::isfinite(rho)) return stopped(StopReason::NonFinite, std::move(diag));
    const auto c = complete_cross_ratio(y_a, y_b, y_c, rho);
    if (is_vanishing(c.denominator, c.scale)) {
        return stopped(StopReason::DegenerateCoefficient, std::move(diag));
    }
    const double u = c.numerator / c.denominator;
    double y_next = y_c + u;
    if (std::abs(y_next) < 0.5 * std::abs(y_c)) {
        // Offset form cancels (e.g. coming back from a pole); the
        // linear-fractional form does not.
        const double num = y_b * (y_c - y_a) - rho * y_c * (y_b - y_a);
        const double den = (y_c - y_a) - rho * (y_b - y_a);
        y_next = num / den;
    }
    diag.roots = {y_next};
    diag.selected = 0;
    return accept(x_next, y_next, std::move(diag));
}

bool distinct_ordinates(std::span<const Point> pts) {
    double lo = pts[0].y;
    double hi = pts[0].y;
    for (const auto& p : pts) {
        lo = std::min(lo, p.y);
        hi = std::max(hi, p.y);
    }
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (is_vanishing(pts[i].y - pts[i - 1].y, hi - lo)) return false;
    }
    return true;
}

void require_points(std::span<const Point> pts, std::size_t n, const char* name) {
    if (pts.size() != n) {
        throw Error(ErrorKind::InvalidArgument,
                    std::string(name) + " needs " + std::to_string(n) + " trailing points");
    }
}

}  // namespace

StepOutcome sly4_step(std::span<const Point> prev4, double x_next,
                      const std::function<double(double)>& forcing) {
    require_points(prev4, 4, "sly4_step");
    StepDiagnostics diag;
    diag.degree = 1;

    const Point& p0 = prev4[0];
    const Point& p1 = prev4[1];
    const Point& p2 = prev4[2];
    const Point& p3 = prev4[3];
    double rho = 0.0;
    try {
        // L4 = 4/(x4 - x0) (L3_new - L3_old) = f(x_mid), x_mid the middle node of five.
        const double l3_old = l3(prev4);
        const double l3_new = l3_old + 0.25 * (x_next - p0.x) * forcing(p2.x);
        const double S = cross_ratio({p1.x, p2.x, p3.x, x_next});
        rho = S * (1.0 - l3_new * (p3.x - p2.x) * (x_next - p1.x) / 6.0);
    } catch (const Error& e) {
        return stopped(e.kind() == ErrorKind::NonFinite ? StopReason::NonFinite
                                                        : StopReason::DegenerateCoefficient,
                       std::move(diag));
    }
    return complete_ordinate(p1.y, p2.y, p3.y, rho, x_next, std::move(diag));
}

PolyCoeffs slx3_polynomial(std::span<const Point> prev3, const ForcingTerm& forcing,
                           RhsEvalPolicy rhs_eval) {
    require_points(prev3, 3, "slx3_polynomial");
    const double d1 = prev3[1].y - prev3[0].y;
    const double d2 = prev3[2].y - prev3[1].y;
    const double s = d1 + d2;

    // Right-hand side as alpha0 + alpha1 u with u = y_n - y_{n-1}.
    double alpha0 = 0.0;
    double alpha1 = 0.0;
    if (const auto* cf = std::get_if<ConstantForcing>(&forcing)) {
        alpha0 = cf->c;
    } else if (std::holds_alternative<IdentityInY>(forcing)) {
        if (rhs_eval == RhsEvalPolicy::NewPoint) {
            alpha0 = prev3[2].y;
            alpha1 = 1.0;
        } else {
            alpha0 = 0.25 * (prev3[0].y + prev3[1].y + 2.0 * prev3[2].y);
            alpha1 = 0.25;
        }
    } else {
        throw Error(ErrorKind::InvalidArgument, "slx3 forcing must be constant or the identity in y");
    }

    // 6 (S - R) = alpha S (y_n - y0)(y2 - y1) with R over (y0, y1, y2, y_n),
    // multiplied through by u (y1 - y0).
    constexpr double S = uniform_cross_ratio;
    const double k = S * d1 * d2;
    PolyCoeffs p;
    p.degree = 3;
    p.c[3] = k * alpha1;
    p.c[2] = k * (alpha0 + alpha1 * s);
    p.c[1] = k * alpha0 * s - 6.0 * S * d1 + 6.0 * s;
    p.c[0] = 6.0 * s * d2;
    return p;
}

StepOutcome slx3_step(std::span<const Point> prev3, double x_next, const ForcingTerm& forcing,
                      RhsEvalPolicy rhs_eval, const RootPolicy& policy) {
    require_points(prev3, 3, "slx3_step");
    StepDiagnostics diag;
    if (!distinct_ordinates(prev3)) return stopped(StopReason::DegenerateCoefficient, std::move(diag));

    const PolyCoeffs poly = reduce_degree(slx3_polynomial(prev3, forcing, rhs_eval));
    diag.degree = poly.degree;
    if (poly.degree == 0) return stopped(StopReason::DegenerateCoefficient, std::move(diag));

    const double y_last = prev3[2].y;
    diag.prediction = extrapolate(prev3, x_next, policy.prediction_order);
    const auto offsets = solve_poly(poly);
    diag.roots.reserve(offsets.size());
    for (double u : offsets) diag.roots.push_back(y_last + u);
    if (offsets.empty()) return stopped(StopReason::NoRealRoot, std::move(diag));

    const auto chosen = select_root(offsets, diag.prediction - y_last, policy.selection);
    const auto it = std::find(offsets.begin(), offsets.end(), *chosen);
    diag.selected = static_cast<int>(it - offsets.begin());
    return accept(x_next, y_last + *chosen, std::move(diag));
}

StepOutcome h5_step(std::span<const Point> prev5, double x_next, double c, const RootPolicy& policy) {
    require_points(prev5, 5, "h5_step");
    StepDiagnostics diag;
    diag.degree = 1;
    diag.prediction = extrapolate(prev5, x_next, policy.prediction_order);

    double r3 = 0.0;
    double r4 = 0.0;
    try {
        r3 = cross_ratio(y_window(prev5, 0));
        r4 = cross_ratio(y_window(prev5, 1));
    } catch (const Error&) {
        return stopped(StopReason::DegenerateCoefficient, std::move(diag));
    }
    if (c != 0.0 && (is_vanishing(r3 - 4.0, 4.0) || is_vanishing(r4 - 4.0, 4.0))) {
        return stopped(StopReason::DegenerateCoefficient, std::move(diag));
    }

    // numerator(R3, R4, R5) = 2 c (R3 - 4)(R4 - 4)(R5 - 4), linear in R5.
    const double k = 2.0 * c * (r3 - 4.0) * (r4 - 4.0);
    const double a = 16.0 + r4 - 5.0 * r3 - k;
    const double b = 3.0 * r4 * r4 - 32.0 * r4 + r3 * r4 + 16.0 * r3 + 4.0 * k;
    const double a_scale = std::max({16.0, std::abs(r4), 5.0 * std::abs(r3), std::abs(k)});
    if (is_vanishing(a, a_scale)) return stopped(StopReason::DegenerateCoefficient, std::move(diag));
    const double r5 = -b / a;
    return complete_ordinate(prev5[2].y, prev5[3].y, prev5[4].y, r5, x_next, std::move(diag));
}

Trajectory integrate(const SchemeSpec& spec, const Stencil& seed, int n_steps,
                     std::optional<double> x_stop) {
    spec.validate();
    const std::size_t arity = spec.arity();
    if (seed.size() != arity) {
        throw Error(ErrorKind::InvalidArgument, std::string(to_string(spec.scheme)) + " needs a seed of " +
                                                    std::to_string(arity) + " points");
    }
    if (n_steps < 0) throw Error(ErrorKind::InvalidArgument, "n_steps must be nonnegative");

    const double h = std::get<UniformLattice>(spec.lattice).h;
    const double x0 = seed[0].x;
    for (std::size_t k = 1; k < arity; ++k) {
        const double expected = x0 + static_cast<double>(k) * h;
        if (std::abs(seed[k].x - expected) > 1e-9 * std::abs(h)) {
            throw Error(ErrorKind::InvalidArgument, "seed abscissae do not lie on the uniform lattice");
        }
    }

    Trajectory traj;
    traj.scheme_id = std::string(to_string(spec.scheme));
    traj.h_nominal = h;
    traj.points.assign(seed.points().begin(), seed.points().end());
    traj.points.reserve(arity + static_cast<std::size_t>(n_steps));

    for (int step = 0; step < n_steps; ++step) {
        const std::size_t n = traj.points.size();
        const double x_next = x0 + static_cast<double>(n) * h;
        if (x_stop && (h > 0.0 ? x_next > *x_stop : x_next < *x_stop)) {
            traj.stop = StopReason::UserLimit;
            return traj;
        }
        const std::span<const Point> trailing(traj.points.data() + (n - arity), arity);

        StepOutcome out = [&]() -> StepOutcome {
            switch (spec.scheme) {
                case SchemeKind::SLy4: {
                    if (const auto* cf = std::get_if<ConstantForcing>(&spec.forcing)) {
                        const double c = cf->c;
                        return sly4_step(trailing, x_next, [c](double) { return c; });
                    }
                    return sly4_step(trailing, x_next, std::get<ForcingOfX>(spec.forcing).fn);
                }
                case SchemeKind::SLx3:
                    return slx3_step(trailing, x_next, spec.forcing, spec.rhs_eval, spec.root_policy);
                case SchemeKind::H5Scheme:
                    return h5_step(trailing, x_next, std::get<ConstantForcing>(spec.forcing).c,
                                   spec.root_policy);
            }
            return stopped(StopReason::DegenerateCoefficient);
        }();

        if (!out.advanced()) {
            traj.stop = out.stop();
            return traj;
        }
        traj.points.push_back(out.point());
    }
    traj.stop = StopReason::Completed;
    return traj;
}

}  // namespace invdisc
