#include "frobdet/eigenproblem.hpp"

#include <algorithm>
#include <cmath>

#include "frobdet/quadrature.hpp"

namespace frobdet {

namespace {

double sum_free(const std::vector<double>& x, int omit) {
    double s = 0;
    for (int i = 0; i < static_cast<int>(x.size()); ++i)
        if (i != omit) s += x[i];
    return s;
}

} // namespace

RealFn boundary_function(const std::string& id, int omit, int n) {
    (void)n;
    if (id == "zero") return [](const std::vector<double>&) { return 0.0; };
    if (id == "one") return [](const std::vector<double>&) { return 1.0; };
    if (id == "sum") return [omit](const std::vector<double>& x) { return sum_free(x, omit); };
    if (id == "prod")
        return [omit](const std::vector<double>& x) {
            double p = 1;
            for (int i = 0; i < static_cast<int>(x.size()); ++i)
                if (i != omit) p *= x[i];
            return p;
        };
    if (id == "sin")
        return [omit](const std::vector<double>& x) { return std::sin(sum_free(x, omit)); };
    if (id == "affine")
        return [omit](const std::vector<double>& x) { return 1.0 + sum_free(x, omit); };
    throw Error("RangeError", "unknown boundary function id: " + id);
}

RealFn rhs_function(const std::string& id, int n) {
    (void)n;
    if (id == "zero") return [](const std::vector<double>&) { return 0.0; };
    if (id == "one") return [](const std::vector<double>&) { return 1.0; };
    if (id == "sum")
        return [](const std::vector<double>& x) { return sum_free(x, -1); };
    if (id == "sin")
        return [](const std::vector<double>& x) { return std::sin(sum_free(x, -1)); };
    throw Error("RangeError", "unknown rhs id: " + id);
}

namespace {

struct Problem {
    int n;
    RealFn lambda;
    std::vector<RealFn> phi; // phi[h], h = 0..n-1, omits coordinate h
    std::vector<double> x0;
    double quad_tol;
    int fn_terms = 30;

    // Sum over subsets of the first h coordinates (full inclusion-exclusion
    // on the prefix), the bracket term attached to phi_(h).
    double bracket_prefix(int h, const std::vector<double>& x) const {
        double sum = 0.0;
        for (unsigned mask = 0; mask < (1u << h); ++mask) {
            std::vector<double> pt = x;
            int bits = 0;
            for (int i = 0; i < h; ++i)
                if (mask & (1u << i)) {
                    pt[i] = x0[i];
                    ++bits;
                }
            sum += (bits % 2 == 0 ? 1.0 : -1.0) * phi[h](pt);
        }
        return sum;
    }

    double boundary_part(const std::vector<double>& x) const {
        double s = 0.0;
        for (int h = 0; h < n; ++h) s += bracket_prefix(h, x);
        return s;
    }

    double big_g(const std::vector<double>& a) const {
        return lambda(a) - boundary_part(a);
    }

    double v_recurse(int axis, std::vector<double>& a, const std::vector<double>& x) const {
        if (axis == n) {
            std::vector<double> d(n);
            for (int i = 0; i < n; ++i) d[i] = x[i] - a[i];
            return big_g(a) * fn_eval(n, d, fn_terms).value;
        }
        auto f = [&](double t) {
            a[axis] = t;
            return v_recurse(axis + 1, a, x);
        };
        double lo = x0[axis], hi = x[axis];
        if (lo == hi) return 0.0;
        return integrate(f, lo, hi, 1e-14, quad_tol, 10).value;
    }

    double u(const std::vector<double>& x) const {
        std::vector<double> a(n);
        return boundary_part(x) + v_recurse(0, a, x);
    }
};

Problem make_problem(int n, const std::string& lambda_id, const BoundaryData& data) {
    if (n < 2 || n > 3) throw Error("RangeError", "eigen_solve supports n in {2, 3}");
    if (static_cast<int>(data.x0.size()) != n || static_cast<int>(data.phi_ids.size()) != n)
        throw Error("RangeError", "boundary data arity mismatch");
    Problem p;
    p.n = n;
    p.lambda = rhs_function(lambda_id, n);
    for (int h = 0; h < n; ++h) p.phi.push_back(boundary_function(data.phi_ids[h], h, n));
    p.x0 = data.x0;
    p.quad_tol = (n == 2) ? 1e-9 : 1e-6;

    // compatibility (pairwise restrictions agree) on a sample grid
    const double offsets[3] = {0.0, 0.35, 0.8};
    for (int h = 0; h < n; ++h)
        for (int l = 0; l < n; ++l) {
            if (h == l) continue;
            for (double o1 : offsets)
                for (double o2 : offsets) {
                    std::vector<double> pt = p.x0;
                    int free1 = -1, free2 = -1;
                    for (int i = 0; i < n; ++i)
                        if (i != h && i != l) (free1 < 0 ? free1 : free2) = i;
                    if (free1 >= 0) pt[free1] += o1;
                    if (free2 >= 0) pt[free2] += o2;
                    // point with x_h = x0_h and x_l = x0_l; remaining coords vary
                    double vh = p.phi[h](pt);
                    double vl = p.phi[l](pt);
                    if (std::abs(vh - vl) > 1e-10)
                        throw Error("IncompatibleBoundaryData",
                                    "phi_(" + std::to_string(h + 1) + ") and phi_(" +
                                        std::to_string(l + 1) + ") disagree on their overlap");
                }
        }
    return p;
}

} // namespace

double eigen_solution_value(int n, const std::string& lambda_id, const BoundaryData& data,
                            const std::vector<double>& x) {
    Problem p = make_problem(n, lambda_id, data);
    return p.u(x);
}

EigenSolveReport eigen_solve(int n, const std::string& lambda_id, const BoundaryData& data,
                             const std::vector<double>& axis_grid) {
    Problem p = make_problem(n, lambda_id, data);
    EigenSolveReport rep;

    // tensor grid
    std::vector<std::vector<double>> pts{{}};
    for (int d = 0; d < n; ++d) {
        std::vector<std::vector<double>> next;
        for (const auto& base : pts)
            for (double t : axis_grid) {
                auto q = base;
                q.push_back(t);
                next.push_back(std::move(q));
            }
        pts = std::move(next);
    }
    for (const auto& x : pts) {
        rep.grid_points.push_back(x);
        rep.values.push_back(p.u(x));
    }

    // boundary faces: x_i = x0_i, the other coordinates run over the grid
    for (int i = 0; i < n; ++i) {
        for (const auto& x : rep.grid_points) {
            std::vector<double> q = x;
            q[i] = p.x0[i];
            double err = std::abs(p.u(q) - p.phi[i](q));
            rep.boundary_max_err = std::max(rep.boundary_max_err, err);
        }
    }
    rep.boundary_ok = rep.boundary_max_err < 1e-6;

    // PDE residual at an interior probe by mixed central differences with one
    // Richardson level
    std::vector<double> probe = p.x0;
    double span = 0.0;
    for (double t : axis_grid) span = std::max(span, std::abs(t - axis_grid.front()));
    for (int i = 0; i < n; ++i) probe[i] = p.x0[i] + std::max(0.3, 0.4 * span);

    auto mixed = [&](double h) {
        double sum = 0.0;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<double> q = probe;
            int bits = 0;
            for (int i = 0; i < n; ++i) {
                if (mask & (1u << i)) {
                    q[i] += h;
                } else {
                    q[i] -= h;
                    ++bits;
                }
            }
            sum += (bits % 2 == 0 ? 1.0 : -1.0) * p.u(q);
        }
        return sum / std::pow(2.0 * h, n);
    };
    double h = (n == 2) ? 0.08 : 0.2;
    double d1 = mixed(h), d2 = mixed(h / 2);
    double dn = (4.0 * d2 - d1) / 3.0;
    rep.pde_residual = std::abs(dn + p.u(probe) - p.lambda(probe));
    rep.pde_ok = rep.pde_residual < ((n == 2) ? 1e-4 : 5e-3);
    return rep;
}

} // namespace frobdet
