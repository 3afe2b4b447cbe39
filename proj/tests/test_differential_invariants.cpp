#include <doctest.h>

#include <cmath>
#include <random>

#include "invdisc/differential_invariants.hpp"
#include "invdisc/taylor.hpp"

using namespace invdisc;
namespace ts = invdisc::taylor;

namespace {

// Explicit polynomial forms in the derivatives, written out independently.
struct Explicit {
    double J3, J4, J5, K3, K4, K5;
};

Explicit explicit_forms(const Jet& j) {
    const double y1 = j[1], y2 = j[2], y3 = j[3], y4 = j[4], y5 = j[5];
    Explicit e{};
    e.J3 = y3 / y1 - 1.5 * (y2 / y1) * (y2 / y1);
    e.J4 = y4 / y1 - 4 * y2 * y3 / (y1 * y1) + 3 * std::pow(y2, 3) / std::pow(y1, 3);
    e.J5 = y5 / y1 - 5 * y2 * y4 / (y1 * y1) + 17 * y2 * y2 * y3 / std::pow(y1, 3) - 4 * y3 * y3 / (y1 * y1) -
           9 * std::pow(y2, 4) / std::pow(y1, 4);
    e.K3 = e.J3 / (y1 * y1);
    e.K4 = y4 / std::pow(y1, 4) - 6 * y3 * y2 / std::pow(y1, 5) + 6 * std::pow(y2, 3) / std::pow(y1, 6);
    e.K5 = y5 / std::pow(y1, 5) - 10 * y4 * y2 / std::pow(y1, 6) - 4 * y3 * y3 / std::pow(y1, 6) +
           42 * y3 * y2 * y2 / std::pow(y1, 7) - 31.5 * std::pow(y2, 4) / std::pow(y1, 8);
    return e;
}

// Series of f(x0 + t) for a generic smooth test function.
ts::Series generic(double x0) {
    const ts::Series t = ts::Series::variable(x0);
    return ts::exp(0.3 * t) + 0.2 * (t * t * t) + 0.1 * (t * t) + ts::atanh(0.5 * t);
}

// Jet of the inverse function at y0 = f(x0), by fixed-point series reversion.
Jet inverse_jet(const ts::Series& f, double x0) {
    ts::Series a = f;
    const double y0 = a.a[0];
    a.a[0] = 0.0;
    const ts::Series s = ts::Series::variable(0.0);
    ts::Series T = (1.0 / a.a[1]) * s;
    for (int it = 0; it < 8; ++it) {
        ts::Series pw = T;
        ts::Series acc;
        for (std::size_t j = 2; j <= ts::order; ++j) {
            pw = pw * T;
            acc = acc + a.a[j] * pw;
        }
        T = (1.0 / a.a[1]) * (s - acc);
    }
    Jet j = T.to_jet(y0);
    j.d[0] = x0;
    return j;
}

ts::Series mobius(const ts::Series& u, double a, double b, double c, double d) {
    return (a * u + ts::Series::constant(b)) / (c * u + ts::Series::constant(d));
}

}  // namespace

TEST_CASE("closed-form jets give the expected invariants") {
    // log x at 1: jet (0, 1, -1, 2, -6, 24).
    Jet lg{1.0, {0, 1, -1, 2, -6, 24}};
    const auto j = jy_invariants(lg);
    CHECK(j.third == doctest::Approx(0.5));
    CHECK(j.fourth == doctest::Approx(-1.0));
    CHECK(j.fifth == doctest::Approx(3.0));

    // arctanh at 0: jet (0, 1, 0, 2, 0, 24); a solution of K3 = 2 with K5 = 2 K3^2.
    Jet at{0.0, {0, 1, 0, 2, 0, 24}};
    const auto k = kx_invariants(at);
    CHECK(k.third == doctest::Approx(2.0));
    CHECK(k.fourth == doctest::Approx(0.0));
    CHECK(k.fifth == doctest::Approx(8.0));

    // e^x: J3 = -1/2, reduced fifth-order invariant 1.
    Jet ex{0.0, {1, 1, 1, 1, 1, 1}};
    CHECK(jy_invariants(ex).third == doctest::Approx(-0.5));
    CHECK(jtilde5(ex) == doctest::Approx(1.0));
}

TEST_CASE("library invariants match the explicit polynomial forms") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        Jet jet{u(rng), {u(rng), 0.5 + std::abs(u(rng)), u(rng), u(rng), u(rng), u(rng)}};
        const auto e = explicit_forms(jet);
        const auto J = jy_invariants(jet);
        const auto K = kx_invariants(jet);
        CHECK(J.third == doctest::Approx(e.J3).epsilon(1e-12));
        CHECK(J.fourth == doctest::Approx(e.J4).epsilon(1e-12));
        CHECK(J.fifth == doctest::Approx(e.J5).epsilon(1e-11));
        CHECK(K.third == doctest::Approx(e.K3).epsilon(1e-12));
        CHECK(K.fourth == doctest::Approx(e.K4).epsilon(1e-12));
        CHECK(K.fifth == doctest::Approx(e.K5).epsilon(1e-11));
        CHECK(jtilde5(jet) == doctest::Approx(e.J5 + 4 * e.J3 * e.J3).epsilon(1e-12));
    }
}

TEST_CASE("SL_x invariants are the SL_y invariants of the inverse function") {
    for (double x0 : {-0.4, 0.1, 0.7}) {
        const ts::Series f = generic(x0);
        const Jet jf = f.to_jet(x0);
        const Jet ji = inverse_jet(f, x0);
        const auto K = kx_invariants(jf);
        const auto Jinv = jy_invariants(ji);
        CHECK(K.third == doctest::Approx(-Jinv.third).epsilon(1e-10));
        CHECK(K.fourth == doctest::Approx(-Jinv.fourth).epsilon(1e-10));
        CHECK(K.fifth == doctest::Approx(-Jinv.fifth + 2.0 * Jinv.third * Jinv.third).epsilon(1e-10));
        // From the K5 relation above: H5 of f and of its inverse sum to 2.
        CHECK(h5_differential(jf) + h5_differential(ji) == doctest::Approx(2.0).epsilon(1e-9));
    }
}

TEST_CASE("H5 routes agree") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        Jet jet{0.0, {u(rng), 0.5 + std::abs(u(rng)), u(rng), u(rng), u(rng), u(rng)}};
        if (std::abs(2 * jet[1] * jet[3] - 3 * jet[2] * jet[2]) < 0.1) continue;
        const double h = h5_differential(jet);
        CHECK(h5_differential_k_route(jet) == doctest::Approx(h).epsilon(1e-10));
        CHECK(h5_differential_expanded(jet) == doctest::Approx(h).epsilon(1e-10));
    }
}

TEST_CASE("group invariance of the differential invariants") {
    const double x0 = 0.3;
    const ts::Series f = generic(x0);
    const Jet base = f.to_jet(x0);

    // SL_y: y -> (a y + b) / (c y + d) leaves J and H5 unchanged.
    const Jet jy = mobius(f, 2.0, 1.0, 0.3, 1.5).to_jet(x0);
    const auto J0 = jy_invariants(base);
    const auto J1 = jy_invariants(jy);
    CHECK(J1.third == doctest::Approx(J0.third).epsilon(1e-10));
    CHECK(J1.fourth == doctest::Approx(J0.fourth).epsilon(1e-10));
    CHECK(J1.fifth == doctest::Approx(J0.fifth).epsilon(1e-10));
    CHECK(h5_differential(jy) == doctest::Approx(h5_differential(base)).epsilon(1e-9));

    // SL_x: y(x) -> y(M(x)) leaves K (evaluated at the preimage) and H5 unchanged.
    const double a = 1.0, b = 0.2, c = 0.4, d = 1.1;
    const double xm = (d * x0 - b) / (a - c * x0);  // M(xm) = x0
    const ts::Series tm = ts::Series::variable(xm);
    const ts::Series mx = mobius(tm, a, b, c, d);
    ts::Series shifted = mx;
    shifted.a[0] -= x0;  // expand f about x0 in powers of (M(x) - x0)
    ts::Series comp = ts::Series::constant(f.a[0]);
    ts::Series pw = ts::Series::constant(1.0);
    for (std::size_t k = 1; k <= ts::order; ++k) {
        pw = pw * shifted;
        comp = comp + f.a[k] * pw;
    }
    const Jet jx = comp.to_jet(xm);
    const auto K0 = kx_invariants(base);
    const auto K1 = kx_invariants(jx);
    CHECK(K1.third == doctest::Approx(K0.third).epsilon(1e-10));
    CHECK(K1.fourth == doctest::Approx(K0.fourth).epsilon(1e-10));
    CHECK(K1.fifth == doctest::Approx(K0.fifth).epsilon(1e-10));
    CHECK(h5_differential(jx) == doctest::Approx(h5_differential(base)).epsilon(1e-9));
}

TEST_CASE("invariants vanish on Moebius jets") {
    for (double x0 : {-0.5, 0.0, 0.8}) {
        const Jet m = mobius(ts::Series::variable(x0), 1.5, -0.5, 0.7, 2.0).to_jet(x0);
        const auto J = jy_invariants(m);
        const auto K = kx_invariants(m);
        CHECK(std::abs(J.third) < 1e-9);
        CHECK(std::abs(J.fourth) < 1e-9);
        CHECK(std::abs(J.fifth) < 1e-9);
        CHECK(std::abs(K.third) < 1e-9);
        CHECK(std::abs(K.fourth) < 1e-9);
        CHECK(std::abs(K.fifth) < 1e-9);
        CHECK_THROWS_AS(h5_differential(m), Error);
    }
}

TEST_CASE("degenerate slopes") {
    Jet flat{0.0, {1, 0, 1, 1, 1, 1}};
    CHECK_THROWS_AS(jy_invariants(flat), Error);
    Jet bad{0.0, {1, std::nan(""), 1, 1, 1, 1}};
    try {
        jy_invariants(bad);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonFinite);
    }
}
