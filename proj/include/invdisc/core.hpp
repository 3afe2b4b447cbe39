#pragma once

// Shared value types for invariant discretizations: lattice points, stencils,
// jets, trajectories and the configuration of one scheme run.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace invdisc {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

enum class ErrorKind {
    DegenerateCoefficient,
    NonFinite,
    DomainError,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Raised by the pure evaluation routines. Scheme stepping never throws for
/// numerical breakdowns; it reports a StopReason instead.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

enum class StopReason {
    Completed,
    NoRealRoot,
    DegenerateCoefficient,
    NonFinite,
    UserLimit,
};

std::string_view to_string(StopReason reason);
std::optional<StopReason> parse_stop_reason(std::string_view text);

/// Ordered window of 3 to 6 lattice points with strictly monotone abscissae.
/// Scheme arities use 3 (SLx3), 4 (SLy4) and 5 (H5) trailing points; the
/// invariants themselves read 4, 5 or 6.
class Stencil {
public:
    static constexpr std::size_t min_size = 3;
    static constexpr std::size_t max_size = 6;

    /// Throws Error(InvalidArgument) on bad length or non-monotone abscissae,
    /// Error(NonFinite) on non-finite entries.
    explicit Stencil(std::vector<Point> points);

    std::span<const Point> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }

    operator std::span<const Point>() const noexcept { return points_; }

private:
    std::vector<Point> points_;
};

/// Value and derivatives d[0..5] = (y, y', y'', y''', y'''', y''''') at x.
struct Jet {
    double x = 0.0;
    std::array<double, 6> d{};

    double operator[](std::size_t k) const { return d[k]; }
};

struct Trajectory {
    std::vector<Point> points;
    StopReason stop = StopReason::Completed;
    std::string scheme_id;
    double h_nominal = 0.0;
};

// -----------------------------------------------------------------------------
// Scheme configuration
// -----------------------------------------------------------------------------

enum class SchemeKind { SLy4, SLx3, H5Scheme };

std::string_view to_string(SchemeKind kind);
std::optional<SchemeKind> parse_scheme_kind(std::string_view text);

struct ConstantForcing {
    double c = 0.0;
};

struct ForcingOfX {
    std::string name;
    std::function<double(double)> fn;
};

/// Right-hand side equal to the dependent variable itself.
struct IdentityInY {};

using ForcingTerm = std::variant<ConstantForcing, ForcingOfX, IdentityInY>;

/// Named forcing functions of x: "cos", "sin", "zero", "one".
std::optional<ForcingOfX> named_forcing(std::string_view name);

std::string describe(const ForcingTerm& forcing);

enum class RootSelection { NearestToPrediction, SmallestReal, LargestReal };

std::string_view to_string(RootSelection sel);
std::optional<RootSelection> parse_root_selection(std::string_view text);

struct RootPolicy {
    RootSelection selection = RootSelection::NearestToPrediction;
    int prediction_order = 2;
};

enum class RhsEvalPolicy { NewPoint, StencilMean };

std::string_view to_string(RhsEvalPolicy policy);
std::optional<RhsEvalPolicy> parse_rhs_eval(std::string_view text);

struct UniformLattice {
    double h = 0.0;
};

/// Lattice of constant abscissa cross-ratio K grown from three seed abscissae.
struct ConstantSLattice {
    double K = 4.0;
    std::array<double, 3> seed{};
};

using LatticeRule = std::variant<UniformLattice, ConstantSLattice>;

struct SchemeSpec {
    SchemeKind scheme = SchemeKind::SLy4;
    ForcingTerm forcing = ConstantForcing{0.0};
    LatticeRule lattice = UniformLattice{0.0};
    RootPolicy root_policy{};
    RhsEvalPolicy rhs_eval = RhsEvalPolicy::NewPoint;

    /// Number of trailing points the scheme's step consumes.
    std::size_t arity() const noexcept;

    /// Throws Error(InvalidArgument) when forcing or lattice do not fit the scheme.
    void validate() const;
};

/// Samples (x0 + k h, f(x0 + k h)) for k = 0..n-1, n in [3, 6].
Stencil seed_stencil_from_function(const std::function<double(double)>& f, double x0, double h,
                                   int n);

}  // namespace invdisc
