#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "invdisc/poly.hpp"

using namespace invdisc;

namespace {

// Coefficients of lead * prod (t - r).
PolyCoeffs from_roots(const std::vector<double>& r, double lead) {
    std::vector<double> c{lead};
    for (double root : r) {
        std::vector<double> n(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            n[i + 1] += c[i];
            n[i] -= root * c[i];
        }
        c = n;
    }
    PolyCoeffs p;
    p.degree = static_cast<int>(r.size());
    for (std::size_t i = 0; i < c.size(); ++i) p.c[i] = c[i];
    return p;
}

}  // namespace

TEST_CASE("roots recovered from the product form") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int trial = 0; trial < 300; ++trial) {
        const int deg = 1 + trial % 3;
        std::vector<double> r;
        for (int i = 0; i < deg; ++i) r.push_back(u(rng));
        std::sort(r.begin(), r.end());
        if (deg > 1 && std::adjacent_find(r.begin(), r.end(), [](double a, double b) { return b - a < 1e-2; }) !=
                           r.end()) {
            continue;
        }
        const auto got = solve_poly(from_roots(r, 0.5 + std::abs(u(rng))));
        REQUIRE(got.size() == r.size());
        for (std::size_t i = 0; i < r.size(); ++i) CHECK(got[i] == doctest::Approx(r[i]).epsilon(1e-9));
    }
}

TEST_CASE("complex pairs and discriminant sign") {
    PolyCoeffs q;  // t^2 + 1
    q.degree = 2;
    q.c = {1.0, 0.0, 1.0, 0.0};
    CHECK(solve_poly(q).empty());
    CHECK(discriminant_sign(q) == -1);

    PolyCoeffs c;  // (t - 2)(t^2 + 1) = t^3 - 2 t^2 + t - 2
    c.degree = 3;
    c.c = {-2.0, 1.0, -2.0, 1.0};
    const auto r = solve_poly(c);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == doctest::Approx(2.0).epsilon(1e-14));

    CHECK(discriminant_sign(from_roots({1.0, 2.0}, 1.0)) == 1);
    CHECK(discriminant_sign(from_roots({1.0, 1.0}, 1.0)) == 0);
}

TEST_CASE("degree reduction") {
    PolyCoeffs p;
    p.degree = 3;
    p.c = {2.0, -1.0, 1e-20, 0.0};
    const auto q = reduce_degree(p);
    CHECK(q.degree == 1);
    const auto r = solve_poly(q);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == doctest::Approx(2.0));

    PolyCoeffs z;
    z.degree = 2;
    z.c = {3.0, 0.0, 0.0, 0.0};
    CHECK(reduce_degree(z).degree == 0);
}

TEST_CASE("Lagrange extrapolation is exact on polynomials") {
    const std::vector<Point> pts{{0.0, 1.0}, {0.5, 1.25}, {1.0, 2.0}, {1.5, 3.25}};  // 1 + x^2
    CHECK(extrapolate(pts, 2.0, 2) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(extrapolate(pts, 2.0, 3) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(extrapolate(pts, 2.0, 1) == doctest::Approx(4.5).epsilon(1e-14));
    CHECK(extrapolate(pts, 2.0, 0) == 3.25);
}

TEST_CASE("root selection") {
    const std::vector<double> r{-1.0, 0.5, 3.0};
    CHECK(*select_root(r, 0.6, RootSelection::NearestToPrediction) == 0.5);
    CHECK(*select_root(r, 2.0, RootSelection::NearestToPrediction) == 3.0);
    CHECK(*select_root(r, 1.75, RootSelection::NearestToPrediction) == 0.5);  // tie goes low
    CHECK(*select_root(r, 0.0, RootSelection::SmallestReal) == -1.0);
    CHECK(*select_root(r, 0.0, RootSelection::LargestReal) == 3.0);
    CHECK_FALSE(select_root({}, 0.0, RootSelection::SmallestReal));
}
