#include "invdisc/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "invdisc/taylor.hpp"

namespace invdisc {

OdeSystem example1_system() {
    return {"example1", 4, [](double x, std::span<const double> s) {
                const double p = s[2] / s[1];
                const double q = s[3] / s[1];
                return s[1] * (std::cos(x) + 4.0 * p * q - 3.0 * p * p * p);
            },
            {}};
}

OdeSystem example2_system(double c) {
    return {"example2", 3, [c](double, std::span<const double> s) {
                return c * s[1] * s[1] * s[1] + 1.5 * s[2] * s[2] / s[1];
            },
            {}};
}

OdeSystem example3_system() {
    return {"example3", 3, [](double, std::span<const double> s) {
                return s[0] * s[1] * s[1] * s[1] + 1.5 * s[2] * s[2] / s[1];
            },
            {}};
}

OdeSystem example5_system(double c) {
    return {"example5", 5, [c](double, std::span<const double> s) {
                const double y1 = s[1], y2 = s[2], y3 = s[3], y4 = s[4];
                const double y1_2 = y1 * y1, y1_3 = y1_2 * y1;
                const double y2_2 = y2 * y2;
                const double num = 2.5 * y1_3 * y1 * y4 * y4 - 10.0 * y1_3 * y2 * y3 * y4 +
                                   2.0 * (c + 4.0) * y1_3 * y3 * y3 * y3 -
                                   2.25 * (c + 2.0 / 3.0) *
                                       (4.0 * y1_2 * y2_2 * y3 * y3 - 6.0 * y1 * y2_2 * y2_2 * y3 +
                                        3.0 * y2_2 * y2_2 * y2_2);
                return num / (y1_3 * (2.0 * y1 * y3 - 3.0 * y2_2));
            },
            [](std::span<const double> s) {
                return s[1] * s[1] * s[1] * (2.0 * s[1] * s[3] - 3.0 * s[2] * s[2]);
            }};
}

namespace {

bool state_ok(std::span<const double> s) {
    return std::all_of(s.begin(), s.end(),
                       [](double v) { return std::isfinite(v) && std::abs(v) <= rk4_blowup_limit; });
}

}  // namespace

Trajectory rk4_integrate(const OdeSystem& sys, std::span<const double> init, double x0, double h, int n,
                         int record_every) {
    const auto m = static_cast<std::size_t>(sys.order);
    if (init.size() != m) throw Error(ErrorKind::InvalidArgument, "initial data must match the ODE order");
    if (!(h != 0.0)) throw Error(ErrorKind::InvalidArgument, "rk4 step must be nonzero");
    if (record_every < 1) throw Error(ErrorKind::InvalidArgument, "record_every must be positive");

    std::vector<double> y(init.begin(), init.end());
    std::vector<double> k1(m), k2(m), k3(m), k4(m), tmp(m);
    // Sign of the singular factor at the start of the current step; a stage
    // that reaches zero or the opposite sign has crossed the singular set.
    int factor_sign = 0;
    bool crossed = false;
    auto sign_of = [&](std::span<const double> s) {
        const double f = sys.singular_factor(s);
        return (f > 0.0) - (f < 0.0);
    };
    auto field = [&](double x, std::span<const double> s, std::vector<double>& out) {
        if (sys.singular_factor && sign_of(s) != factor_sign) crossed = true;
        for (std::size_t i = 0; i + 1 < m; ++i) out[i] = s[i + 1];
        out[m - 1] = sys.rhs(x, s);
    };

    Trajectory traj;
    traj.scheme_id = "rk4:" + sys.name;
    traj.h_nominal = h;
    traj.points.push_back({x0, y[0]});
    if (!state_ok(y)) {
        traj.stop = StopReason::NonFinite;
        return traj;
    }
    for (int step = 1; step <= n; ++step) {
        const double x = x0 + (step - 1) * h;
        if (sys.singular_factor) {
            factor_sign = sign_of(y);
            if (factor_sign == 0) {
                traj.stop = StopReason::NonFinite;
                return traj;
            }
        }
        field(x, y, k1);
        for (std::size_t i = 0; i < m; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        field(x + 0.5 * h, tmp, k2);
        for (std::size_t i = 0; i < m; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        field(x + 0.5 * h, tmp, k3);
        for (std::size_t i = 0; i < m; ++i) tmp[i] = y[i] + h * k3[i];
        field(x + h, tmp, k4);
        for (std::size_t i = 0; i < m; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
        if (crossed || !state_ok(y) || (sys.singular_factor && sign_of(y) != factor_sign)) {
            traj.stop = StopReason::NonFinite;
            return traj;
        }
        if (step % record_every == 0) traj.points.push_back({x0 + step * h, y[0]});
    }
    traj.stop = StopReason::Completed;
    return traj;
}

std::string_view to_string(ExactKind kind) {
    switch (kind) {
        case ExactKind::LogAbs: return "log-abs";
        case ExactKind::Arctanh: return "arctanh";
        case ExactKind::OneOverOneMinusExp: return "one-over-one-minus-exp";
        case ExactKind::TanReciprocal: return "tan-reciprocal";
        case ExactKind::GeneralArctanh: return "general-arctanh";
    }
    return "unknown";
}

std::optional<ExactSolution> parse_exact_solution(std::string_view id) {
    for (auto k : {ExactKind::LogAbs, ExactKind::Arctanh, ExactKind::OneOverOneMinusExp,
                   ExactKind::TanReciprocal}) {
        if (to_string(k) == id) return ExactSolution{k};
    }
    return std::nullopt;
}

namespace {

[[noreturn]] void singular(const ExactSolution& sol, double x) {
    throw Error(ErrorKind::DomainError,
                std::string(to_string(sol.kind)) + " is singular at x = " + std::to_string(x));
}

void check_domain(const ExactSolution& sol, double x) {
    switch (sol.kind) {
        case ExactKind::LogAbs:
            if (x == 0.0) singular(sol, x);
            break;
        case ExactKind::Arctanh:
            if (!(std::abs(x) < 1.0)) singular(sol, x);
            break;
        case ExactKind::OneOverOneMinusExp:
            if (x == 0.0) singular(sol, x);
            break;
        case ExactKind::TanReciprocal:
            if (x == 0.0 || std::cos(1.0 / x) == 0.0) singular(sol, x);
            break;
        case ExactKind::GeneralArctanh:
            if (!(sol.c > 0.0) || !(std::abs(sol.c1 * x + sol.c2) < 1.0)) singular(sol, x);
            break;
    }
}

taylor::Series exact_series(const ExactSolution& sol, double x) {
    using namespace taylor;
    const Series t = Series::variable(x);
    switch (sol.kind) {
        case ExactKind::LogAbs:
            return x > 0.0 ? log(t) : log(-1.0 * t);
        case ExactKind::Arctanh:
            return atanh(t);
        case ExactKind::OneOverOneMinusExp:
            return reciprocal(1.0 + (-1.0) * exp(t));
        case ExactKind::TanReciprocal:
            return tan(reciprocal(t));
        case ExactKind::GeneralArctanh:
            return sol.c3 + std::sqrt(2.0 / sol.c) * atanh(sol.c2 + sol.c1 * t);
    }
    return Series{};
}

}  // namespace

double exact_eval(const ExactSolution& sol, double x) {
    check_domain(sol, x);
    switch (sol.kind) {
        case ExactKind::LogAbs: return std::log(std::abs(x));
        case ExactKind::Arctanh: return std::atanh(x);
        case ExactKind::OneOverOneMinusExp: return -1.0 / std::expm1(x);
        case ExactKind::TanReciprocal: return std::tan(1.0 / x);
        case ExactKind::GeneralArctanh: return sol.c3 + std::sqrt(2.0 / sol.c) * std::atanh(sol.c1 * x + sol.c2);
    }
    return 0.0;
}

Jet exact_jet(const ExactSolution& sol, double x) {
    check_domain(sol, x);
    Jet j = exact_series(sol, x).to_jet(x);
    j.d[0] = exact_eval(sol, x);
    return j;
}

double chi(std::span<const double> candidate, std::span<const double> reference) {
    if (candidate.size() != reference.size() || candidate.empty()) {
        throw Error(ErrorKind::InvalidArgument, "chi needs equal, nonempty sequences");
    }
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        const double d = candidate[i] - reference[i];
        num += d * d;
        den += reference[i] * reference[i];
    }
    if (den == 0.0) throw Error(ErrorKind::DegenerateCoefficient, "chi reference is identically zero");
    return std::sqrt(num / den);
}

std::vector<double> ordinates(const Trajectory& traj) {
    std::vector<double> ys;
    ys.reserve(traj.points.size());
    for (const auto& p : traj.points) ys.push_back(p.y);
    return ys;
}

double chi(const Trajectory& candidate, std::span<const double> reference) {
    const auto ys = ordinates(candidate);
    return chi(ys, reference);
}

}  // namespace invdisc
