#include "frobdet/john.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace frobdet {

namespace {

double pos_pow(double t, double e) { return t > 0.0 ? std::pow(t, e) : 0.0; }

} // namespace

QuadResult john_transform_numeric(const JohnParams& p) {
    const double l1 = p.lambda[0], l2 = p.lambda[1], l3 = p.lambda[2];
    if (!(l1 > 0 && l2 > 0 && l3 > 0))
        throw Error("DomainViolation", "all lambda_i must be positive");

    auto raw = [&](double x) {
        return pos_pow(p.alpha1 * x + p.beta1, l1 - 1.0) *
               pos_pow(p.alpha2 * x + p.beta2, l2 - 1.0) * pos_pow(x, l3 - 1.0);
    };

    // support upper bound from the negative-slope factors
    double upper = std::numeric_limits<double>::infinity();
    double upper_exp_sum = 0.0; // sum of (lambda_k - 1) over factors vanishing at the bound
    for (int k = 0; k < 2; ++k) {
        double a = (k == 0) ? p.alpha1 : p.alpha2;
        double b = (k == 0) ? p.beta1 : p.beta2;
        double l = (k == 0) ? l1 : l2;
        if (a < 0.0) {
            double t = -b / a;
            if (t < upper - 1e-14) {
                upper = t;
                upper_exp_sum = l - 1.0;
            } else if (std::abs(t - upper) <= 1e-14) {
                upper_exp_sum += l - 1.0;
            }
        } else if (b <= 0.0) {
            // factor nonpositive on all of x > 0: integral vanishes
            return {0.0, 0.0};
        }
    }

    const bool bounded = std::isfinite(upper);
    if (!bounded && !(l1 + l2 + l3 < 2.0))
        throw Error("DomainViolation", "unbounded support requires lambda_1+lambda_2+lambda_3 < 2");
    if (bounded && upper <= 0.0) return {0.0, 0.0};

    QuadResult total;
    auto accumulate = [&](const QuadResult& r) {
        total.value += r.value;
        total.error_estimate += r.error_estimate;
    };

    const double split = bounded ? upper / 2.0 : 1.0;

    // lower piece: substitute x = u^{1/l3} so x^{l3-1} dx = (1/l3) du
    {
        double ulim = std::pow(split, l3);
        auto f = [&](double u) {
            double x = std::pow(u, 1.0 / l3);
            return pos_pow(p.alpha1 * x + p.beta1, l1 - 1.0) *
                   pos_pow(p.alpha2 * x + p.beta2, l2 - 1.0) / l3;
        };
        accumulate(integrate(f, 0.0, ulim));
    }

    if (bounded) {
        // upper piece: substitute upper - x = s^{1/mu}, mu = upper_exp_sum + 1
        double mu = upper_exp_sum + 1.0;
        double slim = std::pow(upper - split, mu);
        auto f = [&](double s) {
            double x = upper - std::pow(s, 1.0 / mu);
            double v = raw(x);
            // remove the (upper - x)^{mu-1} part and the Jacobian together:
            // dx = (1/mu) s^{1/mu - 1} ds; v contains (upper-x)^{mu-1} = s^{(mu-1)/mu}
            double t = upper - x;
            if (t <= 0.0) return 0.0;
            return v / std::pow(t, mu - 1.0) / mu;
        };
        accumulate(integrate(f, 0.0, slim));
    } else {
        double err = 0.0;
        double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            raw, split, std::numeric_limits<double>::infinity(), 15, 1e-10, &err);
        accumulate({v, err});
    }
    if (!(std::isfinite(total.value)))
        throw Error("QuadratureNonConvergence", "integral did not converge");
    return total;
}

double gauss_2f1(double a, double b, double c, double x) {
    if (std::abs(x) >= 0.95)
        throw Error("SeriesDomain", "Gauss series restricted to |x| < 0.95");
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 10000; ++k) {
        double denom = (c + k) * (k + 1);
        if (denom == 0.0) throw Error("GammaPole", "2F1 lower parameter at a nonpositive integer");
        term *= (a + k) * (b + k) / denom * x;
        sum += term;
        if (std::abs(term) < 1e-12 * std::max(1.0, std::abs(sum))) return sum;
        if (a + k == 0.0 || b + k == 0.0) return sum; // series terminated
    }
    return sum;
}

double john_hypergeometric_closed(const JohnParams& p) {
    const double l1 = p.lambda[0], l2 = p.lambda[1], l3 = p.lambda[2];
    if (!(p.alpha1 < 0 && p.alpha2 < 0 && p.beta1 > 0 && p.beta2 > 0))
        throw Error("DomainViolation", "closed form needs alpha_i < 0 < beta_i");
    double x = (p.alpha1 * p.beta2) / (p.alpha2 * p.beta1);
    for (double v : {l2, l3, l2 + l3})
        if (v <= 0.0 && v == std::floor(v))
            throw Error("GammaPole", "Gamma argument at a nonpositive integer");
    double pref = boost::math::tgamma(l2) * boost::math::tgamma(l3) /
                  boost::math::tgamma(l2 + l3);
    pref *= std::pow(p.beta1, l1 - 1.0) * std::pow(p.beta2, l2 + l3 - 1.0) *
            std::pow(std::abs(p.alpha2), -l3);
    return pref * gauss_2f1(-l1 + 1.0, l3, l2 + l3, x);
}

} // namespace frobdet
