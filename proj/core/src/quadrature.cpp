#include "frobdet/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace frobdet {

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     double rel_tol, int max_depth) {
    (void)abs_tol;
    QuadResult r;
    double err = 0.0;
    r.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, max_depth, rel_tol, &err);
    r.error_estimate = err;
    return r;
}

} // namespace frobdet
