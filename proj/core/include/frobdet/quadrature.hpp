#pragma once

#include <functional>

#include "frobdet/numbers.hpp"

namespace frobdet {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Adaptive Gauss-Kronrod (15-point) on a finite interval.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-12, double rel_tol = 1e-10, int max_depth = 30);

} // namespace frobdet
