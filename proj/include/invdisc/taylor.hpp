#pragma once

// Truncated Taylor series through order 5, used to build exact jets of the
// closed-form solutions. Coefficient k holds f^(k)(x0) / k!.

#include <array>
#include <cmath>
#include <cstddef>

#include "invdisc/core.hpp"

namespace invdisc::taylor {

inline constexpr std::size_t order = 5;

struct Series {
    std::array<double, order + 1> a{};

    static Series constant(double v) {
        Series s;
        s.a[0] = v;
        return s;
    }

    /// The identity map expanded at x0.
    static Series variable(double x0) {
        Series s;
        s.a[0] = x0;
        s.a[1] = 1.0;
        return s;
    }

    Jet to_jet(double x) const {
        Jet j;
        j.x = x;
        double fact = 1.0;
        for (std::size_t k = 0; k <= order; ++k) {
            if (k > 0) fact *= static_cast<double>(k);
            j.d[k] = a[k] * fact;
        }
        return j;
    }
};

inline Series operator+(Series l, const Series& r) {
    for (std::size_t k = 0; k <= order; ++k) l.a[k] += r.a[k];
    return l;
}

inline Series operator-(Series l, const Series& r) {
    for (std::size_t k = 0; k <= order; ++k) l.a[k] -= r.a[k];
    return l;
}

inline Series operator*(double s, Series r) {
    for (auto& v : r.a) v *= s;
    return r;
}

inline Series operator+(double s, Series r) {
    r.a[0] += s;
    return r;
}

inline Series operator*(const Series& l, const Series& r) {
    Series out;
    for (std::size_t k = 0; k <= order; ++k) {
        for (std::size_t j = 0; j <= k; ++j) out.a[k] += l.a[j] * r.a[k - j];
    }
    return out;
}

inline Series reciprocal(const Series& s) {
    if (s.a[0] == 0.0) throw Error(ErrorKind::DomainError, "series reciprocal of zero");
    Series out;
    out.a[0] = 1.0 / s.a[0];
    for (std::size_t k = 1; k <= order; ++k) {
        double acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) acc += s.a[j] * out.a[k - j];
        out.a[k] = -acc / s.a[0];
    }
    return out;
}

inline Series operator/(const Series& l, const Series& r) { return l * reciprocal(r); }

/// Series of f' (its top coefficient is unknown and set to zero).
inline Series derivative(const Series& s) {
    Series out;
    for (std::size_t k = 0; k < order; ++k) out.a[k] = static_cast<double>(k + 1) * s.a[k + 1];
    return out;
}

/// Antiderivative with constant term c0.
inline Series integral(const Series& s, double c0) {
    Series out;
    out.a[0] = c0;
    for (std::size_t k = 1; k <= order; ++k) out.a[k] = s.a[k - 1] / static_cast<double>(k);
    return out;
}

inline Series exp(const Series& g) {
    Series f;
    f.a[0] = std::exp(g.a[0]);
    for (std::size_t k = 1; k <= order; ++k) {
        double acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * g.a[j] * f.a[k - j];
        f.a[k] = acc / static_cast<double>(k);
    }
    return f;
}

inline Series log(const Series& g) {
    if (!(g.a[0] > 0.0)) throw Error(ErrorKind::DomainError, "series log of nonpositive value");
    return integral(derivative(g) / g, std::log(g.a[0]));
}

inline Series atanh(const Series& g) {
    if (!(std::abs(g.a[0]) < 1.0)) throw Error(ErrorKind::DomainError, "series atanh outside (-1, 1)");
    return integral(derivative(g) / (1.0 + (-1.0) * (g * g)), std::atanh(g.a[0]));
}

/// f = tan(g) from f' = (1 + f^2) g'.
inline Series tan(const Series& g) {
    Series f;
    f.a[0] = std::tan(g.a[0]);
    for (std::size_t k = 1; k <= order; ++k) {
        // (1 + f^2) coefficients up to k - 1 only need f up to k - 1.
        double acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            const std::size_t m = k - j;
            double one_plus_f2 = (m == 0) ? 1.0 : 0.0;
            for (std::size_t i = 0; i <= m; ++i) one_plus_f2 += f.a[i] * f.a[m - i];
            acc += static_cast<double>(j) * g.a[j] * one_plus_f2;
        }
        f.a[k] = acc / static_cast<double>(k);
    }
    return f;
}

}  // namespace invdisc::taylor
