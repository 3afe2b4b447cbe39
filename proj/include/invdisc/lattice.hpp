#pragma once

// Lattices: uniform grids and lattices of constant abscissa cross-ratio
// S_j = K, which are invariant under SL_x(2) x SL_y(2).

#include <array>
#include <vector>

#include "invdisc/core.hpp"

namespace invdisc {

/// x0, x0 + h, ..., x0 + (n - 1) h. Each node is computed as x0 + k h.
std::vector<double> uniform_lattice(double x0, double h, int n);

/// The next abscissa x_d with cross-ratio (x_a, x_b, x_c, x_d) = K.
double extend_constant_s(double x_a, double x_b, double x_c, double K);

/// n abscissae of the constant cross-ratio lattice grown from a 3-point seed.
std::vector<double> constant_s_lattice(const ConstantSLattice& rule, int n);

/// Nodes x_m = 1/(A m + B) + C for m = 0..n-1 (the K = 4 family).
std::vector<double> reciprocal_lattice(double A, double B, double C, int n);

/// W on the reciprocal lattice x_m = 1/(A m + B) + C.
double w0_sol2(double A, double B);

}  // namespace invdisc
