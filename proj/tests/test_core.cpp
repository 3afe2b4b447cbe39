#include <doctest.h>

#include <cmath>
#include <limits>

#include "invdisc/core.hpp"

using namespace invdisc;

TEST_CASE("stencil validation") {
    CHECK_NOTHROW(Stencil({{0, 1}, {1, 2}, {2, 0}}));
    CHECK_NOTHROW(Stencil({{0, 1}, {-1, 2}, {-2, 0}, {-3, 1}}));  // decreasing is fine

    auto kind_of = [](std::vector<Point> pts) {
        try {
            Stencil s(std::move(pts));
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::DomainError;  // sentinel: no throw
    };
    CHECK(kind_of({{0, 1}, {1, 2}}) == ErrorKind::InvalidArgument);
    CHECK(kind_of(std::vector<Point>(7, Point{})) == ErrorKind::InvalidArgument);
    CHECK(kind_of({{0, 1}, {1, 2}, {1, 3}}) == ErrorKind::InvalidArgument);
    CHECK(kind_of({{0, 1}, {2, 2}, {1, 3}}) == ErrorKind::InvalidArgument);
    CHECK(kind_of({{0, 1}, {1, std::nan("")}, {2, 3}}) == ErrorKind::NonFinite);
    CHECK(kind_of({{0, 1}, {1, 2}, {std::numeric_limits<double>::infinity(), 3}}) ==
          ErrorKind::NonFinite);
}

TEST_CASE("names round-trip") {
    for (auto r : {StopReason::Completed, StopReason::NoRealRoot, StopReason::DegenerateCoefficient,
                   StopReason::NonFinite, StopReason::UserLimit}) {
        CHECK(parse_stop_reason(to_string(r)) == r);
    }
    for (auto k : {SchemeKind::SLy4, SchemeKind::SLx3, SchemeKind::H5Scheme}) {
        CHECK(parse_scheme_kind(to_string(k)) == k);
    }
    for (auto s : {RootSelection::NearestToPrediction, RootSelection::SmallestReal, RootSelection::LargestReal}) {
        CHECK(parse_root_selection(to_string(s)) == s);
    }
    for (auto p : {RhsEvalPolicy::NewPoint, RhsEvalPolicy::StencilMean}) {
        CHECK(parse_rhs_eval(to_string(p)) == p);
    }
    CHECK_FALSE(parse_scheme_kind("rk4"));
    CHECK_FALSE(named_forcing("tan"));
    CHECK(named_forcing("cos")->fn(0.0) == 1.0);
}

TEST_CASE("scheme spec validation") {
    SchemeSpec s;
    s.lattice = UniformLattice{0.1};
    s.scheme = SchemeKind::SLy4;
    s.forcing = *named_forcing("cos");
    CHECK(s.arity() == 4);
    CHECK_NOTHROW(s.validate());

    s.forcing = IdentityInY{};
    CHECK_THROWS_AS(s.validate(), Error);

    s.scheme = SchemeKind::SLx3;
    CHECK(s.arity() == 3);
    CHECK_NOTHROW(s.validate());
    s.root_policy.prediction_order = 3;  // needs 4 points, only 3 available
    CHECK_THROWS_AS(s.validate(), Error);
    s.root_policy.prediction_order = 2;

    s.scheme = SchemeKind::H5Scheme;
    CHECK(s.arity() == 5);
    CHECK_THROWS_AS(s.validate(), Error);
    s.forcing = ConstantForcing{0.0};
    CHECK_NOTHROW(s.validate());

    s.lattice = UniformLattice{0.0};
    CHECK_THROWS_AS(s.validate(), Error);
    s.lattice = ConstantSLattice{};
    CHECK_THROWS_AS(s.validate(), Error);
}

TEST_CASE("seed from function") {
    const auto s = seed_stencil_from_function([](double x) { return 1.0 / (1.0 - std::exp(x)); }, -1.0, 0.1, 6);
    REQUIRE(s.size() == 6);
    CHECK(s[0].x == -1.0);
    CHECK(s[5].x == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(s[2].y == doctest::Approx(1.0 / (1.0 - std::exp(-0.8))).epsilon(1e-15));

    CHECK_THROWS_AS(seed_stencil_from_function([](double x) { return 1.0 / x; }, -0.2, 0.1, 4), Error);
    CHECK_THROWS_AS(seed_stencil_from_function([](double x) { return x; }, 0.0, 0.1, 2), Error);
}
