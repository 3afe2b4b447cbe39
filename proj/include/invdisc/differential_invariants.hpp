#pragma once

// Differential invariants evaluated on a jet (y, y', ..., y''''').
//
//   J3..J5  : SL_y(2), built from the Schwarzian J3 = y'''/y' - 3/2 (y''/y')^2
//             and its x-derivatives.
//   K3..K5  : SL_x(2).
//   H5      : the lowest-order invariant of SL_x(2) x SL_y(2).

#include "invdisc/core.hpp"

namespace invdisc {

struct JyTriple {
    double third = 0.0;
    double fourth = 0.0;
    double fifth = 0.0;
};

struct KxTriple {
    double third = 0.0;
    double fourth = 0.0;
    double fifth = 0.0;
};

JyTriple jy_invariants(const Jet& jet);

/// J5 + 4 J3^2 in its reduced closed form.
double jtilde5(const Jet& jet);

KxTriple kx_invariants(const Jet& jet);

/// Relative width of the band around 2 y' y''' = 3 y''^2 treated as the
/// J3 = 0 manifold, where H5 is undefined.
inline constexpr double schwarzian_manifold_tolerance = 1e-12;

/// H5 = J5/J3^2 - 5/4 J4^2/J3^3.
double h5_differential(const Jet& jet);

/// H5 = K5/K3^2 - 5/4 K4^2/K3^3. Same quantity; kept for cross-checking.
double h5_differential_k_route(const Jet& jet);

/// H5 from its expanded polynomial form in the derivatives.
double h5_differential_expanded(const Jet& jet);

}  // namespace invdisc
