#include "frobdet/pde.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "frobdet/quadrature.hpp"

namespace frobdet {

namespace {

// composed central first differences: weights at integer offsets, in units of h
std::map<int, double> stencil_1d(int order, double h) {
    std::map<int, double> w{{0, 1.0}};
    for (int k = 0; k < order; ++k) {
        std::map<int, double> nx;
        for (const auto& [off, wt] : w) {
            nx[off + 1] += wt / (2.0 * h);
            nx[off - 1] -= wt / (2.0 * h);
        }
        w = std::move(nx);
    }
    return w;
}

} // namespace

TestFunction test_function(const std::string& id, int max_degree) {
    TestFunction tf;
    if (id.rfind("poly", 0) == 0) {
        int k = std::stoi(id.substr(4));
        if (k < 0 || k > max_degree)
            throw Error("RangeError", "polynomial test degree out of range: " + id);
        tf.polynomial = true;
        tf.degree = k;
        tf.f = [k](CD t) {
            CD v{1.0, 0.0};
            for (int i = 0; i < k; ++i) v *= t;
            return v;
        };
    } else if (id == "exp") {
        tf.f = [](CD t) { return std::exp(0.4 * t); };
    } else if (id == "sin") {
        tf.f = [](CD t) { return std::sin(t); };
    } else if (id == "gauss") {
        tf.f = [](CD t) { return std::exp(-0.25 * t * t); };
    } else {
        throw Error("RangeError", "unknown test function id: " + id);
    }
    return tf;
}

double fd_apply_operator(const SparsePoly<Rat>& symbol,
                         const std::function<CD(const std::vector<double>&)>& w,
                         const std::vector<double>& x, double h, double* scale_out) {
    CD total{0.0, 0.0};
    double scale = 0.0;
    int n = symbol.nvars;
    for (const auto& [exps, coeff] : symbol.terms) {
        double c = to_double(coeff);
        // tensor product of per-variable stencils over variables with exps > 0
        std::vector<int> vars;
        std::vector<std::map<int, double>> sts;
        for (int i = 0; i < n; ++i)
            if (exps[i] > 0) {
                vars.push_back(i);
                sts.push_back(stencil_1d(exps[i], h));
            }
        // iterate combinations
        std::vector<std::map<int, double>::const_iterator> its;
        for (auto& s : sts) its.push_back(s.begin());
        bool done = vars.empty();
        if (vars.empty()) {
            CD t = c * w(x);
            total += t;
            scale = std::max(scale, std::abs(t));
            continue;
        }
        while (!done) {
            double wt = c;
            std::vector<double> pt = x;
            for (std::size_t k = 0; k < vars.size(); ++k) {
                wt *= its[k]->second;
                pt[vars[k]] += its[k]->first * h;
            }
            CD t = wt * w(pt);
            total += t;
            scale = std::max(scale, std::abs(t));
            // advance
            std::size_t k = 0;
            while (k < its.size()) {
                ++its[k];
                if (its[k] != sts[k].end()) break;
                its[k] = sts[k].begin();
                ++k;
            }
            if (k == its.size()) done = true;
        }
    }
    if (scale_out) *scale_out = scale;
    return scale > 0.0 ? std::abs(total) / scale : std::abs(total);
}

PlaneWaveResult plane_wave_check(const FiniteGroup& g, const std::vector<CD>& alpha,
                                 const std::string& fn_id) {
    if (static_cast<int>(alpha.size()) != g.n)
        throw Error("RangeError", "alpha must have one entry per group element");
    SparsePoly<Rat> symbol = expand_group_det(g);
    CD theta = symbol.eval(alpha, CD{1.0, 0.0});
    PlaneWaveResult res;
    res.symbol_value = std::abs(theta);
    if (res.symbol_value > 1e-10)
        throw Error("NotOnVariety", "Theta(alpha) != 0 at the given point");

    TestFunction tf = test_function(fn_id, 2 * g.n);
    if (tf.polynomial) {
        // Theta(d) F(sum alpha x) = Theta(alpha) * F^(n)(s): exact zero up to
        // the floating evaluation of Theta(alpha) itself.
        double fall = 1.0;
        for (int i = 0; i < g.n; ++i) fall *= std::max(1, tf.degree - i);
        res.residual = (tf.degree < g.n) ? 0.0 : res.symbol_value * fall;
        res.exact = true;
        return res;
    }

    std::vector<double> x0(g.n);
    for (int i = 0; i < g.n; ++i) x0[i] = 0.17 + 0.11 * i;
    auto w = [&](const std::vector<double>& x) {
        CD s{0.0, 0.0};
        for (int i = 0; i < g.n; ++i) s += alpha[i] * x[i];
        return tf.f(s);
    };
    double h = std::pow(2.2e-16, 1.0 / (g.n + 2));
    res.residual = fd_apply_operator(symbol, w, x0, h);
    return res;
}

SeparatedResult separated_solution_residual(const FiniteGroup& g,
                                            const std::vector<std::string>& fn_ids) {
    if (!g.is_abelian()) throw Error("NotAbelian", "separation chart needs an abelian group");
    if (static_cast<int>(fn_ids.size()) != g.n)
        throw Error("RangeError", "need one function id per character");
    CharacterTable table = abelian_characters(g);

    // chart u_i(x) = sum_g chi_i(g) x_g; invertibility is character orthogonality
    std::vector<std::vector<CD>> V(g.n, std::vector<CD>(g.n));
    for (int i = 0; i < g.n; ++i)
        for (int gg = 0; gg < g.n; ++gg) V[i][gg] = table.value_at(i, gg);

    bool all_poly = true;
    std::vector<TestFunction> fns;
    for (const auto& id : fn_ids) {
        fns.push_back(test_function(id, 3));
        if (!fns.back().polynomial) all_poly = false;
    }

    SeparatedResult res;
    if (all_poly) {
        // In u-coordinates the operator is n^n prod_i d/du_i; every summand
        // omits one u-variable, so the exact application vanishes.
        res.exact = true;
        res.residual = 0.0;
        return res;
    }

    auto w = [&](const std::vector<double>& x) {
        std::vector<CD> u(g.n, CD{0.0, 0.0});
        for (int i = 0; i < g.n; ++i)
            for (int gg = 0; gg < g.n; ++gg) u[i] += V[i][gg] * x[gg];
        CD sum{0.0, 0.0};
        for (int i = 0; i < g.n; ++i) {
            CD s{0.0, 0.0};
            for (int j = 0; j < g.n; ++j)
                if (j != i) s += u[j];
            sum += fns[i].f(0.3 * s);
        }
        return sum;
    };
    SparsePoly<Rat> symbol = expand_group_det(g);
    std::vector<double> x0(g.n);
    for (int i = 0; i < g.n; ++i) x0[i] = 0.13 + 0.07 * i;
    double h = std::pow(2.2e-16, 1.0 / (g.n + 2));
    res.residual = fd_apply_operator(symbol, w, x0, h);
    return res;
}

SparsePoly<Rat> cayley_omega_apply(int f, const SparsePoly<Rat>& q) {
    if (f < 1 || f > 4) throw Error("SizeTooLarge", "Cayley operator limited to f <= 4");
    if (q.nvars != f * f) throw Error("RangeError", "polynomial must live in f*f variables");
    SparsePoly<Rat> out(f * f);
    std::vector<int> perm(f);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // sign of the permutation
        int inv = 0;
        for (int i = 0; i < f; ++i)
            for (int j = i + 1; j < f; ++j)
                if (perm[i] > perm[j]) ++inv;
        SparsePoly<Rat> term = q;
        for (int j = 0; j < f; ++j) term = term.derivative(j * f + perm[j]);
        if (inv % 2 == 0)
            out = out + term;
        else
            out = out - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

SparsePoly<Rat> matrix_substitute(int f, const std::vector<std::vector<Rat>>& a,
                                  const SparsePoly<Rat>& q) {
    if (q.nvars != f * f) throw Error("RangeError", "polynomial must live in f*f variables");
    // z_{jl} -> sum_k a_{jk} z_{kl}
    std::vector<SparsePoly<Rat>> subst;
    for (int j = 0; j < f; ++j)
        for (int l = 0; l < f; ++l) {
            SparsePoly<Rat> s(f * f);
            for (int k = 0; k < f; ++k)
                if (a[j][k] != 0) s = s + SparsePoly<Rat>::variable(f * f, k * f + l, a[j][k]);
            subst.push_back(std::move(s));
        }
    SparsePoly<Rat> out(f * f);
    for (const auto& [exps, coeff] : q.terms) {
        SparsePoly<Rat> term = SparsePoly<Rat>::constant(f * f, coeff);
        for (int v = 0; v < f * f; ++v)
            for (int e = 0; e < exps[v]; ++e) term = term * subst[v];
        out = out + term;
    }
    return out;
}

CommutatorResult polarization_commutator_check(int f, int j, int l, int r,
                                               const SparsePoly<Rat>& q) {
    if (f < 1 || f > 3) throw Error("SizeTooLarge", "polarization check limited to f <= 3");
    if (j == l) throw Error("RangeError", "polarization operator needs j != l");
    if (j < 0 || j >= f || l < 0 || l >= f) throw Error("RangeError", "row index out of range");
    if (r < 1 || r > 3) throw Error("RangeError", "power r must lie in [1, 3]");

    auto delta = [&](const SparsePoly<Rat>& p) {
        SparsePoly<Rat> out(f * f);
        for (int m = 0; m < f; ++m) {
            SparsePoly<Rat> d = p.derivative(l * f + m);
            out = out + SparsePoly<Rat>::variable(f * f, j * f + m, Rat(1)) * d;
        }
        return out;
    };
    SparsePoly<Rat> dq = q;
    for (int t = 0; t < r; ++t) dq = delta(dq);
    SparsePoly<Rat> oq = cayley_omega_apply(f, q);
    for (int t = 0; t < r; ++t) oq = delta(oq);
    SparsePoly<Rat> comm = cayley_omega_apply(f, dq) - oq;
    CommutatorResult res;
    res.witness = comm;
    res.ok = comm.is_zero();
    return res;
}

Omega9Result omega9_kernel_residual(const std::string& fn_id, const std::vector<double>& alpha,
                                    const std::vector<double>& beta,
                                    const std::vector<double>& gamma) {
    if (alpha.size() != 3 || beta.size() != 3 || gamma.size() != 3)
        throw Error("RangeError", "omega9 needs three alpha, beta, gamma entries each");
    std::function<double(const std::array<double, 5>&)> f;
    if (fn_id == "gauss") {
        f = [](const std::array<double, 5>& y) {
            double s = 0;
            for (double v : y) s += v * v;
            return std::exp(-s);
        };
    } else if (fn_id == "xgauss") {
        f = [](const std::array<double, 5>& y) {
            double s = 0;
            for (double v : y) s += v * v;
            return y[0] * std::exp(-s);
        };
    } else {
        throw Error("RangeError", "unknown omega9 integrand id: " + fn_id);
    }

    // phi(a, b, c) by nested quadrature; integrand decays like exp(-x2^2-x3^2)
    auto phi = [&](const std::vector<double>& p) {
        auto outer = [&](double x2) {
            auto inner = [&](double x3) {
                std::array<double, 5> y{p[0] * x2 + p[3] * x3 + p[6],
                                        p[1] * x2 + p[4] * x3 + p[7],
                                        p[2] * x2 + p[5] * x3 + p[8], x2, x3};
                return f(y);
            };
            return integrate(inner, -7.0, 7.0, 1e-12, 1e-9, 12).value;
        };
        return integrate(outer, -7.0, 7.0, 1e-12, 1e-8, 12).value;
    };

    std::vector<double> base;
    base.insert(base.end(), alpha.begin(), alpha.end());
    base.insert(base.end(), beta.begin(), beta.end());
    base.insert(base.end(), gamma.begin(), gamma.end());

    // det of 3x3 partials: 6 signed third mixed derivatives, Richardson once
    auto third = [&](int va, int vb, int vc, double h) {
        double sum = 0.0;
        for (int sa : {-1, 1})
            for (int sb : {-1, 1})
                for (int sc : {-1, 1}) {
                    std::vector<double> p = base;
                    p[va] += sa * h;
                    p[vb] += sb * h;
                    p[vc] += sc * h;
                    sum += sa * sb * sc * phi(p);
                }
        return sum / (8.0 * h * h * h);
    };
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    const double signs[6] = {1, 1, 1, -1, -1, -1};
    const double h = 0.08;
    double total = 0.0, scale = 0.0;
    for (int t = 0; t < 6; ++t) {
        int va = perms[t][0];          // column of the alpha row
        int vb = 3 + perms[t][1];      // beta row
        int vc = 6 + perms[t][2];      // gamma row
        double d1 = third(va, vb, vc, h);
        double d2 = third(va, vb, vc, h / 2);
        double d = (4.0 * d2 - d1) / 3.0;
        total += signs[t] * d;
        scale = std::max(scale, std::abs(d));
    }
    Omega9Result res;
    res.residual = scale > 0 ? std::abs(total) / scale : std::abs(total);
    return res;
}

} // namespace frobdet
