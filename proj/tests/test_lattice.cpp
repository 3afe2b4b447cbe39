#include <doctest.h>

#include <array>
#include <cmath>

#include "invdisc/discrete_invariants.hpp"
#include "invdisc/lattice.hpp"

using namespace invdisc;

namespace {

double cr(double a0, double a1, double a2, double a3) { return ((a3 - a1) * (a2 - a0)) / ((a3 - a2) * (a1 - a0)); }

std::array<double, 6> six(const std::vector<double>& xs, std::size_t at) {
    std::array<double, 6> w{};
    for (std::size_t i = 0; i < 6; ++i) w[i] = xs[at + i];
    return w;
}

}  // namespace

TEST_CASE("uniform lattice") {
    const auto xs = uniform_lattice(-1.0, 0.1, 21);
    REQUIRE(xs.size() == 21);
    CHECK(xs[0] == -1.0);
    CHECK(xs[20] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(xs[7] == -1.0 + 7 * 0.1);
    CHECK_THROWS_AS(uniform_lattice(0.0, 0.0, 3), Error);
    CHECK_THROWS_AS(uniform_lattice(0.0, 1.0, 0), Error);
}

TEST_CASE("constant cross-ratio lattice keeps its cross ratio") {
    for (double K : {3.0, 4.0, 4.5}) {
        const auto xs = constant_s_lattice(ConstantSLattice{K, {0.0, 1.0, 1.8}}, 12);
        REQUIRE(xs.size() == 12);
        for (std::size_t i = 0; i + 3 < xs.size(); ++i) {
            CHECK(cr(xs[i], xs[i + 1], xs[i + 2], xs[i + 3]) == doctest::Approx(K).epsilon(1e-9));
        }
    }
    // K = 4 from an arithmetic seed reproduces the uniform grid.
    const auto u = constant_s_lattice(ConstantSLattice{4.0, {0.0, 0.5, 1.0}}, 8);
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(u[i] == doctest::Approx(0.5 * i).epsilon(1e-12));

    CHECK_THROWS_AS(constant_s_lattice(ConstantSLattice{4.0, {0.0, 1.0, 0.5}}, 5), Error);
    CHECK_THROWS_AS(constant_s_lattice(ConstantSLattice{0.0, {0.0, 1.0, 2.0}}, 5), Error);
    CHECK_THROWS_AS(extend_constant_s(0.0, 0.0, 1.0, 4.0), Error);
}

TEST_CASE("reciprocal lattice has cross ratio 4 and W equal to W0") {
    const double A = 1.0, B = 6.0, C = 0.25;
    const auto xs = reciprocal_lattice(A, B, C, 10);
    for (std::size_t i = 0; i + 3 < xs.size(); ++i) {
        CHECK(cr(xs[i], xs[i + 1], xs[i + 2], xs[i + 3]) == doctest::Approx(4.0).epsilon(1e-12));
    }
    // Independent rational value: 2 (8 - 30 - 36) / (7 * 8 * 9 * 10).
    CHECK(w0_sol2(1.0, 6.0) == doctest::Approx(-116.0 / 5040.0).epsilon(1e-15));
    CHECK(w_coefficient(six(xs, 0)) == doctest::Approx(w0_sol2(A, B)).epsilon(1e-9));
    CHECK(w_coefficient(six(reciprocal_lattice(2.0, 5.0, -1.0, 6), 0)) ==
          doctest::Approx(w0_sol2(2.0, 5.0)).epsilon(1e-9));
    CHECK_THROWS_AS(reciprocal_lattice(1.0, -2.0, 0.0, 4), Error);
}
