#include "invdisc/core.hpp"

#include <cmath>
#include <sstream>

namespace invdisc {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DegenerateCoefficient: return "DegenerateCoefficient";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

std::string_view to_string(StopReason reason) {
    switch (reason) {
        case StopReason::Completed: return "Completed";
        case StopReason::NoRealRoot: return "NoRealRoot";
        case StopReason::DegenerateCoefficient: return "DegenerateCoefficient";
        case StopReason::NonFinite: return "NonFinite";
        case StopReason::UserLimit: return "UserLimit";
    }
    return "Unknown";
}

std::optional<StopReason> parse_stop_reason(std::string_view text) {
    for (auto r : {StopReason::Completed, StopReason::NoRealRoot, StopReason::DegenerateCoefficient,
                   StopReason::NonFinite, StopReason::UserLimit}) {
        if (to_string(r) == text) return r;
    }
    return std::nullopt;
}

Stencil::Stencil(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.size() < min_size || points_.size() > max_size) {
        throw Error(ErrorKind::InvalidArgument,
                    "stencil needs 3 to 6 points, got " + std::to_string(points_.size()));
    }
    for (const auto& p : points_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw Error(ErrorKind::NonFinite, "stencil point is not finite");
        }
    }
    const bool increasing = points_[1].x > points_[0].x;
    for (std::size_t i = 1; i < points_.size(); ++i) {
        const double dx = points_[i].x - points_[i - 1].x;
        if (increasing ? !(dx > 0.0) : !(dx < 0.0)) {
            throw Error(ErrorKind::InvalidArgument, "stencil abscissae are not strictly monotone");
        }
    }
}

std::string_view to_string(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::SLy4: return "sly4";
        case SchemeKind::SLx3: return "slx3";
        case SchemeKind::H5Scheme: return "h5";
    }
    return "unknown";
}

std::optional<SchemeKind> parse_scheme_kind(std::string_view text) {
    if (text == "sly4") return SchemeKind::SLy4;
    if (text == "slx3") return SchemeKind::SLx3;
    if (text == "h5") return SchemeKind::H5Scheme;
    return std::nullopt;
}

std::optional<ForcingOfX> named_forcing(std::string_view name) {
    if (name == "cos") return ForcingOfX{"cos", [](double x) { return std::cos(x); }};
    if (name == "sin") return ForcingOfX{"sin", [](double x) { return std::sin(x); }};
    if (name == "zero") return ForcingOfX{"zero", [](double) { return 0.0; }};
    if (name == "one") return ForcingOfX{"one", [](double) { return 1.0; }};
    return std::nullopt;
}

std::string describe(const ForcingTerm& forcing) {
    struct Visitor {
        std::string operator()(const ConstantForcing& f) const {
            std::ostringstream os;
            os.precision(17);
            os << "constant:" << f.c;
            return os.str();
        }
        std::string operator()(const ForcingOfX& f) const { return "x:" + f.name; }
        std::string operator()(const IdentityInY&) const { return "y"; }
    };
    return std::visit(Visitor{}, forcing);
}

std::string_view to_string(RootSelection sel) {
    switch (sel) {
        case RootSelection::NearestToPrediction: return "nearest";
        case RootSelection::SmallestReal: return "smallest";
        case RootSelection::LargestReal: return "largest";
    }
    return "unknown";
}

std::optional<RootSelection> parse_root_selection(std::string_view text) {
    if (text == "nearest") return RootSelection::NearestToPrediction;
    if (text == "smallest") return RootSelection::SmallestReal;
    if (text == "largest") return RootSelection::LargestReal;
    return std::nullopt;
}

std::string_view to_string(RhsEvalPolicy policy) {
    switch (policy) {
        case RhsEvalPolicy::NewPoint: return "new-point";
        case RhsEvalPolicy::StencilMean: return "stencil-mean";
    }
    return "unknown";
}

std::optional<RhsEvalPolicy> parse_rhs_eval(std::string_view text) {
    if (text == "new-point") return RhsEvalPolicy::NewPoint;
    if (text == "stencil-mean") return RhsEvalPolicy::StencilMean;
    return std::nullopt;
}

std::size_t SchemeSpec::arity() const noexcept {
    switch (scheme) {
        case SchemeKind::SLy4: return 4;
        case SchemeKind::SLx3: return 3;
        case SchemeKind::H5Scheme: return 5;
    }
    return 0;
}

void SchemeSpec::validate() const {
    const bool is_const = std::holds_alternative<ConstantForcing>(forcing);
    const bool is_of_x = std::holds_alternative<ForcingOfX>(forcing);
    const bool is_of_y = std::holds_alternative<IdentityInY>(forcing);
    switch (scheme) {
        case SchemeKind::SLy4:
            if (is_of_y) {
                throw Error(ErrorKind::InvalidArgument, "sly4 needs a forcing depending on x only");
            }
            break;
        case SchemeKind::SLx3:
            if (is_of_x) {
                throw Error(ErrorKind::InvalidArgument,
                            "slx3 needs a constant forcing or the identity in y");
            }
            break;
        case SchemeKind::H5Scheme:
            if (!is_const) {
                throw Error(ErrorKind::InvalidArgument, "h5 needs a constant forcing");
            }
            break;
    }
    if (is_of_x && !std::get<ForcingOfX>(forcing).fn) {
        throw Error(ErrorKind::InvalidArgument, "forcing function is empty");
    }
    const auto* uniform = std::get_if<UniformLattice>(&lattice);
    if (uniform == nullptr) {
        throw Error(ErrorKind::InvalidArgument, "schemes run on uniform lattices only");
    }
    if (!(uniform->h != 0.0) || !std::isfinite(uniform->h)) {
        throw Error(ErrorKind::InvalidArgument, "lattice step must be finite and nonzero");
    }
    if (root_policy.prediction_order < 0 ||
        static_cast<std::size_t>(root_policy.prediction_order) + 1 > arity()) {
        throw Error(ErrorKind::InvalidArgument, "prediction order exceeds the stencil length");
    }
}

Stencil seed_stencil_from_function(const std::function<double(double)>& f, double x0, double h,
                                   int n) {
    if (n < 3 || n > 6) {
        throw Error(ErrorKind::InvalidArgument, "seed length must be in [3, 6]");
    }
    if (!(h != 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "seed step must be nonzero");
    }
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double x = x0 + k * h;
        const double y = f(x);
        if (!std::isfinite(y)) {
            throw Error(ErrorKind::NonFinite, "seed function is not finite at a sample abscissa");
        }
        pts.push_back({x, y});
    }
    return Stencil(std::move(pts));
}

}  // namespace invdisc
