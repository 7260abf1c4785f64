#pragma once

#include <string>
#include <vector>

#include "frobdet/efun.hpp"

namespace frobdet {

/// Boundary functions phi_(h) depend on every coordinate except x_h.
/// Built-in ids: "zero", "one", "sum" (sum of the n-1 free coordinates),
/// "prod", "sin" (sin of the sum), "affine" (1 + sum).
struct BoundaryData {
    std::vector<double> x0;
    std::vector<std::string> phi_ids; // phi_ids[h-1] names phi_(h)
};

RealFn boundary_function(const std::string& id, int omit, int n);

/// RHS ids: "zero", "one", "sum", "sin".
RealFn rhs_function(const std::string& id, int n);

struct EigenSolveReport {
    std::vector<std::vector<double>> grid_points;
    std::vector<double> values;       // u at the grid points
    double boundary_max_err = 0.0;    // faces x_i = x_i^(0)
    double pde_residual = 0.0;        // d^n u / dx_1..dx_n + u - lambda
    bool boundary_ok = false;
    bool pde_ok = false;
};

/// Solves d^n w / dx_1...dx_n + w = lambda with w|_{x_i = x0_i} = phi_(i),
/// n in {2, 3}, via bracket terms plus the iterated-integral particular
/// solution; certifies boundary data and the PDE residual.
EigenSolveReport eigen_solve(int n, const std::string& lambda_id, const BoundaryData& data,
                             const std::vector<double>& axis_grid);

/// Direct evaluation of the assembled solution at one point (exposed for the
/// certificates and the CLI).
double eigen_solution_value(int n, const std::string& lambda_id, const BoundaryData& data,
                            const std::vector<double>& x);

} // namespace frobdet
