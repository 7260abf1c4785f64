#include "frobdet/afrob.hpp"

#include <cmath>

#include "frobdet/frobgroup.hpp"

namespace frobdet {

template <class T>
static std::vector<T> frob_product_impl(const std::vector<T>& z, const std::vector<T>& x,
                                        const std::vector<T>& y) {
    if (z.size() != x.size() || z.size() != y.size())
        throw Error("BadFormat", "frob_product: vector lengths differ");
    std::vector<T> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] == T(0)) throw Error("OnHyperplane", "coordinate " + std::to_string(i) + " is zero");
        out[i] = x[i] * y[i] / z[i];
    }
    return out;
}

std::vector<Rat> frob_product(const std::vector<Rat>& z, const std::vector<Rat>& x,
                              const std::vector<Rat>& y) {
    return frob_product_impl(z, x, y);
}

std::vector<double> frob_product(const std::vector<double>& z, const std::vector<double>& x,
                                 const std::vector<double>& y) {
    return frob_product_impl(z, x, y);
}

StructureReport structure_checks(const std::vector<Rat>& z) {
    int n = static_cast<int>(z.size());
    for (int i = 0; i < n; ++i)
        if (z[i] == 0) throw Error("OnHyperplane", "coordinate " + std::to_string(i) + " is zero");

    StructureReport rep;
    // rho_i = e_i (x) e_i^T: coordinate projections. All three certificate
    // families are exact matrix identities in these projections.
    auto rho = [n](int i) {
        std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
        m[i][i] = 1;
        return m;
    };
    auto mul = [n](const std::vector<std::vector<Rat>>& a, const std::vector<std::vector<Rat>>& b) {
        std::vector<std::vector<Rat>> c(n, std::vector<Rat>(n, Rat(0)));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (a[i][k] != 0)
                    for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    auto is_zero = [n](const std::vector<std::vector<Rat>>& m) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m[i][j] != 0) return false;
        return true;
    };

    std::vector<std::vector<Rat>> sum(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        auto r = rho(i);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) sum[a][b] += r[a][b];
    }
    for (int i = 0; i < n; ++i) sum[i][i] -= 1;
    rep.partition_of_identity = is_zero(sum);

    rep.dunkl = true;
    for (int i = 0; i < n && rep.dunkl; ++i)
        for (int j = 0; j < n && rep.dunkl; ++j) {
            if (i == j) continue;
            auto ri = rho(i), rj = rho(j);
            if (!is_zero(mul(ri, rj))) rep.dunkl = false;
            // [rho_i + rho_j, rho_i]
            auto sum_ij = ri;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) sum_ij[a][b] += rj[a][b];
            auto comm = mul(sum_ij, ri);
            auto rev = mul(ri, sum_ij);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) comm[a][b] -= rev[a][b];
            if (!is_zero(comm)) rep.dunkl = false;
        }

    // g = standard bilinear form; self-adjointness of each symmetric rho_i.
    rep.self_adjoint = true;
    for (int i = 0; i < n && rep.self_adjoint; ++i) {
        auto r = rho(i);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (r[a][b] != r[b][a]) rep.self_adjoint = false;
    }

    // g restricted to H_i: delete row/column i from the Gram matrix.
    rep.restrictions_nondegenerate = true;
    for (int i = 0; i < n && rep.restrictions_nondegenerate; ++i) {
        std::vector<std::vector<Rat>> gr;
        for (int a = 0; a < n; ++a) {
            if (a == i) continue;
            std::vector<Rat> row;
            for (int b = 0; b < n; ++b) {
                if (b == i) continue;
                row.push_back(a == b ? Rat(1) : Rat(0));
            }
            gr.push_back(std::move(row));
        }
        if (rational_rank(gr) != n - 1) rep.restrictions_nondegenerate = false;
    }

    rep.ok = rep.partition_of_identity && rep.dunkl && rep.self_adjoint &&
             rep.restrictions_nondegenerate;
    return rep;
}

PotentialReport potential_check(const std::vector<double>& z) {
    int n = static_cast<int>(z.size());
    for (double zi : z)
        if (!(zi > 0.0)) throw Error("NonPositiveCoordinate", "potential needs all z_i > 0");

    auto phi = [](const std::vector<double>& p) {
        double s = 0.0;
        for (double v : p) s += v * v * std::log(v) / 2.0;
        return s;
    };

    // 4th-order central third derivative along a direction triple, at step h.
    auto third = [&](int i, int j, int k, double h) {
        // Compose first-difference operators in i, j, k on the 4th-order
        // 5-point first-derivative stencil would be costly; instead use the
        // standard trick: nested 2nd-order differences at h and h/2, one
        // Richardson level -> 4th order overall.
        auto d1 = [&](auto&& f, int axis, double hh) {
            return [f, axis, hh](std::vector<double> p) {
                p[axis] += hh;
                double fp = f(p);
                p[axis] -= 2 * hh;
                double fm = f(p);
                return (fp - fm) / (2 * hh);
            };
        };
        auto g3 = [&](double hh) {
            auto f1 = d1(phi, k, hh);
            auto f2 = d1(f1, j, hh);
            auto f3 = d1(f2, i, hh);
            return f3(z);
        };
        double a = g3(h), b = g3(h / 2);
        return (4.0 * b - a) / 3.0;
    };

    PotentialReport rep;
    const double h = 1e-2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                double expect = (i == j && j == k) ? 1.0 / z[i] : 0.0;
                double got = third(i, j, k, h);
                rep.max_deviation = std::max(rep.max_deviation, std::abs(got - expect));
            }
    rep.ok = rep.max_deviation < 1e-7;
    return rep;
}

} // namespace frobdet
