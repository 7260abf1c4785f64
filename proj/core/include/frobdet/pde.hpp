#pragma once

#include <functional>
#include <string>
#include <vector>

#include "frobdet/detfact.hpp"
#include "frobdet/group.hpp"
#include "frobdet/poly.hpp"

namespace frobdet {

/// Univariate test functions addressable by id: "poly<k>" (t^k), "exp",
/// "sin", "gauss" (exp(-t^2)).
struct TestFunction {
    std::function<CD(CD)> f;
    bool polynomial = false;
    int degree = 0; // for the polynomial branch
};
TestFunction test_function(const std::string& id, int max_degree);

struct PlaneWaveResult {
    double symbol_value = 0.0; // |Theta(alpha)|
    double residual = 0.0;     // normalized operator residual on the wave
    bool exact = false;        // symbolic (polynomial) branch used
};

/// Applies Theta(G)((d_g)) to F(sum alpha_g x_g); alpha must lie on the
/// variety Theta(alpha) = 0 within 1e-10.
PlaneWaveResult plane_wave_check(const FiniteGroup& g, const std::vector<CD>& alpha,
                                 const std::string& fn_id);

struct SeparatedResult {
    double residual = 0.0;
    bool exact = false;
};

/// w = sum over characters chi of g_chi(u-variables omitting u_chi), pushed
/// through the character chart; operator applied by FD (or exactly for
/// polynomial families).
SeparatedResult separated_solution_residual(const FiniteGroup& g,
                                            const std::vector<std::string>& fn_ids);

/// Omega = det(d_{z_jl}) applied exactly; q lives in f*f variables z_{jl}
/// flattened row-major. f <= 4.
SparsePoly<Rat> cayley_omega_apply(int f, const SparsePoly<Rat>& q);

/// A * q: substitute Z -> A Z (entries of A rational, row-major f x f).
SparsePoly<Rat> matrix_substitute(int f, const std::vector<std::vector<Rat>>& a,
                                  const SparsePoly<Rat>& q);

struct CommutatorResult {
    bool ok = false;
    SparsePoly<Rat> witness; // nonzero commutator image on failure
};

/// Verifies [Omega, Delta_{jl}^r](q) = 0 with Delta_{jl} = sum_m z_{jm} d_{lm}.
CommutatorResult polarization_commutator_check(int f, int j, int l, int r,
                                               const SparsePoly<Rat>& q);

struct Omega9Result {
    double residual = 0.0; // relative to the largest signed FD term
};

/// Separable 5-variable integrand ids: "gauss" (exp(-sum y_i^2)),
/// "xgauss" (y_1 * exp(-sum y_i^2)).
Omega9Result omega9_kernel_residual(const std::string& fn_id, const std::vector<double>& alpha,
                                    const std::vector<double>& beta,
                                    const std::vector<double>& gamma);

/// FD application of the full operator symbol to w at x, normalized by the
/// largest single weighted stencil term. Shared by the plane-wave and
/// separated-solution certificates.
double fd_apply_operator(const SparsePoly<Rat>& symbol,
                         const std::function<CD(const std::vector<double>&)>& w,
                         const std::vector<double>& x, double h, double* scale_out = nullptr);

} // namespace frobdet
