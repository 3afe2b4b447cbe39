#include "invdisc/differential_invariants.hpp"

#include <algorithm>
#include <cmath>

namespace invdisc {

namespace {

bool is_zero_band(double v, double scale) {
    return !(std::abs(v) > schwarzian_manifold_tolerance * scale);
}

void require_slope(const Jet& jet) {
    for (double v : jet.d) {
        if (!std::isfinite(v)) throw Error(ErrorKind::NonFinite, "jet entry is not finite");
    }
    if (jet.d[1] == 0.0) {
        throw Error(ErrorKind::DegenerateCoefficient, "first derivative vanishes");
    }
}

void require_off_manifold(const Jet& jet) {
    const double y1 = jet.d[1];
    const double y2 = jet.d[2];
    const double y3 = jet.d[3];
    const double scale = std::max(std::abs(y1 * y3), y2 * y2);
    if (is_zero_band(2.0 * y1 * y3 - 3.0 * y2 * y2, scale)) {
        throw Error(ErrorKind::DegenerateCoefficient, "jet lies on the J3 = 0 manifold");
    }
}

}  // namespace

JyTriple jy_invariants(const Jet& jet) {
    require_slope(jet);
    const double p = jet.d[2] / jet.d[1];
    const double q = jet.d[3] / jet.d[1];
    const double r = jet.d[4] / jet.d[1];
    const double s = jet.d[5] / jet.d[1];
    JyTriple out;
    out.third = q - 1.5 * p * p;
    out.fourth = r - 4.0 * p * q + 3.0 * p * p * p;
    out.fifth = s - 5.0 * p * r + 17.0 * p * p * q - 4.0 * q * q - 9.0 * p * p * p * p;
    return out;
}

double jtilde5(const Jet& jet) {
    require_slope(jet);
    const double p = jet.d[2] / jet.d[1];
    const double q = jet.d[3] / jet.d[1];
    const double r = jet.d[4] / jet.d[1];
    const double s = jet.d[5] / jet.d[1];
    return s - 5.0 * p * r + 5.0 * p * p * q;
}

KxTriple kx_invariants(const Jet& jet) {
    require_slope(jet);
    const double y1 = jet.d[1];
    const double y2 = jet.d[2];
    const double y3 = jet.d[3];
    const double y4 = jet.d[4];
    const double y5 = jet.d[5];
    const double u = 1.0 / y1;
    const double u2 = u * u;
    const double u4 = u2 * u2;
    KxTriple out;
    out.third = u2 * (y3 * u - 1.5 * (y2 * u) * (y2 * u));
    out.fourth = y4 * u4 - 6.0 * y3 * y2 * u4 * u + 6.0 * y2 * y2 * y2 * u4 * u2;
    out.fifth = y5 * u4 * u - 10.0 * y4 * y2 * u4 * u2 - 4.0 * y3 * y3 * u4 * u2 +
                42.0 * y3 * y2 * y2 * u4 * u2 * u - 31.5 * y2 * y2 * y2 * y2 * u4 * u4;
    return out;
}

double h5_differential(const Jet& jet) {
    require_slope(jet);
    require_off_manifold(jet);
    const JyTriple j = jy_invariants(jet);
    return j.fifth / (j.third * j.third) - 1.25 * j.fourth * j.fourth / (j.third * j.third * j.third);
}

double h5_differential_k_route(const Jet& jet) {
    require_slope(jet);
    require_off_manifold(jet);
    const KxTriple k = kx_invariants(jet);
    return k.fifth / (k.third * k.third) - 1.25 * k.fourth * k.fourth / (k.third * k.third * k.third);
}

double h5_differential_expanded(const Jet& jet) {
    require_slope(jet);
    require_off_manifold(jet);
    const double y1 = jet.d[1];
    const double y2 = jet.d[2];
    const double y3 = jet.d[3];
    const double y4 = jet.d[4];
    const double y5 = jet.d[5];
    const double D = 2.0 * y3 * y1 - 3.0 * y2 * y2;
    const double y1_2 = y1 * y1;
    const double y1_3 = y1_2 * y1;
    const double y2_2 = y2 * y2;
    const double body = 2.0 * y1_3 * D * y5 + 20.0 * y1_3 * y2 * y3 * y4 - 5.0 * y1_3 * y1 * y4 * y4 -
                        16.0 * y1_3 * y3 * y3 * y3 + 12.0 * y1_2 * y2_2 * y3 * y3 -
                        18.0 * y1 * y2_2 * y2_2 * y3 + 9.0 * y2_2 * y2_2 * y2_2;
    return 2.0 * body / (D * D * D);
}

}  // namespace invdisc
