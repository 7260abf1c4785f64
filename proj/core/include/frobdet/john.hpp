#pragma once

#include <array>

#include "frobdet/quadrature.hpp"

namespace frobdet {

struct JohnParams {
    std::array<double, 3> lambda{};
    double alpha1 = 0, alpha2 = 0, beta1 = 0, beta2 = 0;
};

/// psi_lambda by adaptive quadrature of
///   (alpha1 x + beta1)_+^{l1-1} (alpha2 x + beta2)_+^{l2-1} x_+^{l3-1}
/// with endpoint-singularity substitutions.
QuadResult john_transform_numeric(const JohnParams& p);

/// Closed form via Gamma prefactor and the Gauss series (|x| < 0.95).
double john_hypergeometric_closed(const JohnParams& p);

/// Gauss 2F1 by direct series; SeriesDomain for |x| >= 0.95.
double gauss_2f1(double a, double b, double c, double x);

} // namespace frobdet
