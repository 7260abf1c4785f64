#pragma once

#include <vector>

#include "frobdet/numbers.hpp"

namespace frobdet {

/// Componentwise product (X.Y)_i = X_i Y_i / z_i on the coordinate-arrangement
/// complement; throws OnHyperplane if some z_i = 0.
std::vector<Rat> frob_product(const std::vector<Rat>& z, const std::vector<Rat>& x,
                              const std::vector<Rat>& y);
std::vector<double> frob_product(const std::vector<double>& z, const std::vector<double>& x,
                                 const std::vector<double>& y);

struct StructureReport {
    bool partition_of_identity = false;     // sum rho_i = Id
    bool dunkl = false;                     // rho_i rho_j = 0 (i != j), codim-2 commutators
    bool self_adjoint = false;              // g(rho_i u, v) = g(u, rho_i v)
    bool restrictions_nondegenerate = false; // rank of g restricted to each H_i is n-1
    bool ok = false;
};

/// Exact certificates for the projector system rho_i = z_i^-1 (z_i e_i ox e_i)
/// ... concretely rho_i = e_i ox e_i at the coordinate arrangement.
StructureReport structure_checks(const std::vector<Rat>& z);

struct PotentialReport {
    double max_deviation = 0.0;
    bool ok = false; // max deviation < 1e-7
};

/// FD certificate that the third derivatives of Phi(z) = sum z_i^2 log(z_i)/2
/// reproduce T(e_i,e_j,e_k) = delta_ijk / z_i. Requires all z_i > 0.
PotentialReport potential_check(const std::vector<double>& z);

} // namespace frobdet
