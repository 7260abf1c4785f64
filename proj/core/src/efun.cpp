#include "frobdet/efun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include <boost/math/special_functions/gamma.hpp>

namespace frobdet {

namespace {

void check_range(int n, int lo, int hi, const char* what) {
    if (n < lo || n > hi)
        throw Error("RangeError", std::string(what) + " out of range [" + std::to_string(lo) +
                                      "," + std::to_string(hi) + "]: " + std::to_string(n));
}

Int factorial(int n) {
    Int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

Int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int b = 1;
    for (int i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

} // namespace

std::vector<Int> falling_factorial_coeffs(int n) {
    check_range(n, 1, 30, "n");
    // expand x(x-1)...(x-n+1); poly[k] = coefficient of x^k
    std::vector<Int> poly{0, 1}; // x
    for (int i = 1; i < n; ++i) {
        std::vector<Int> next(poly.size() + 1, Int(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= Int(i) * poly[k];
        }
        poly = std::move(next);
    }
    // poly[n-k] = (-1)^k s_{k,n}
    std::vector<Int> s;
    for (int k = 1; k <= n - 1; ++k) {
        Int v = poly[n - k];
        if (k % 2 == 1) v = -v;
        s.push_back(v);
    }
    return s;
}

HilbertCoeffs hilbert_c_coeffs(int n) {
    check_range(n, 1, 30, "n");
    // recurrence A_{m+1,j} = j(A_{m,j-1} + A_{m,j}), A_{1,1} = 1
    std::vector<Int> rec(2, Int(0));
    rec[1] = 1;
    for (int m = 1; m < n; ++m) {
        std::vector<Int> next(m + 2, Int(0));
        for (int j = 1; j <= m + 1; ++j) {
            Int prev_j = (j < static_cast<int>(rec.size())) ? rec[j] : Int(0);
            next[j] = Int(j) * (rec[j - 1] + prev_j);
        }
        rec = std::move(next);
    }
    rec.resize(n + 1, Int(0));

    // difference formula A_{n,j} = sum_m (-1)^m binom(j,m) (j-m)^n
    std::vector<Int> dif(n + 1, Int(0));
    for (int j = 0; j <= n; ++j) {
        Int a = 0;
        for (int m = 0; m <= j; ++m) {
            Int t = binom(j, m);
            Int p = 1;
            for (int e = 0; e < n; ++e) p *= (j - m);
            t *= p;
            if (m % 2 == 1) t = -t;
            a += t;
        }
        dif[j] = a;
    }
    if (rec != dif)
        throw Error("ToleranceViolation", "Hilbert coefficient dual computations disagree");

    HilbertCoeffs out;
    out.A = rec;
    out.C.resize(n + 1);
    for (int j = 0; j <= n; ++j) out.C[j] = Rat(rec[j], factorial(j));

    // mixed Stirling identity for all valid (q, i)
    auto c_table = [](int m) {
        std::vector<Rat> c(m + 1, Rat(0));
        c[0] = (m == 0) ? Rat(1) : Rat(0);
        if (m >= 1) {
            std::vector<Int> r2(2, Int(0));
            r2[1] = 1;
            for (int t = 1; t < m; ++t) {
                std::vector<Int> nx(t + 2, Int(0));
                for (int j = 1; j <= t + 1; ++j) {
                    Int pj = (j < static_cast<int>(r2.size())) ? r2[j] : Int(0);
                    nx[j] = Int(j) * (r2[j - 1] + pj);
                }
                r2 = std::move(nx);
            }
            r2.resize(m + 1, Int(0));
            for (int j = 0; j <= m; ++j) c[j] = Rat(r2[j], factorial(j));
        }
        return c;
    };
    auto stirling_s = [](int m, int k) -> Int {
        // s_{k,m}: x(x-1)...(x-m+1) = sum (-1)^k s_{k,m} x^{m-k}, s_{0,m} = 1
        if (k == 0) return 1;
        if (m < 1 || k < 0 || k > m - 1) return 0;
        std::vector<Int> poly{0, 1};
        for (int i = 1; i < m; ++i) {
            std::vector<Int> next(poly.size() + 1, Int(0));
            for (std::size_t t = 0; t < poly.size(); ++t) {
                next[t + 1] += poly[t];
                next[t] -= Int(i) * poly[t];
            }
            poly = std::move(next);
        }
        Int v = poly[m - k];
        if (k % 2 == 1) v = -v;
        return v;
    };
    for (int q = 0; q < n; ++q) {
        auto sub = c_table(n - q);
        for (int i = 0; i + q <= n; ++i) {
            Rat lhs = 0;
            for (int p = q + i; p <= n; ++p) {
                Rat term = out.C[p] * Rat(binom(p, i)) * Rat(stirling_s(p - i, p - i - q));
                if ((p - i - q) % 2 == 1) term = -term;
                lhs += term;
            }
            Rat rhs = Rat(binom(n, q)) * ((i < static_cast<int>(sub.size())) ? sub[i] : Rat(0));
            if (lhs != rhs)
                throw Error("ToleranceViolation", "Stirling mixed identity failed");
        }
    }
    return out;
}

std::vector<Int> sigma_coeffs(int n) {
    check_range(n, 1, 30, "n");
    // prod_{i=0}^{n-1} (z - nu(1-in)); track coefficients of z^{n-h} nu^h
    std::vector<Int> sig{1}; // sigma_0 = 1
    for (int i = 0; i < n; ++i) {
        Int root = Int(1) - Int(i) * n; // in units of nu
        std::vector<Int> next(sig.size() + 1, Int(0));
        for (std::size_t h = 0; h < sig.size(); ++h) {
            next[h] += sig[h];
            next[h + 1] -= root * sig[h];
        }
        sig = std::move(next);
    }
    return sig;
}

OdeSpec ode_coeffs(int n) {
    check_range(n, 1, 20, "n");
    auto sig = sigma_coeffs(n);
    // C tables for n, n-1, ..., 1
    std::vector<std::vector<Rat>> ctab(n + 1);
    for (int m = 1; m <= n; ++m) ctab[m] = hilbert_c_coeffs(m).C;
    ctab[0] = {Rat(1)};

    OdeSpec spec;
    spec.n = n;
    for (int r = 1; r <= n; ++r) {
        std::vector<Int> poly(r, Int(0)); // coefficients of nu^0..nu^{r-1}
        for (int k = 0; k <= r - 1; ++k) {
            int mm = n - k;
            int jj = n + 1 - r;
            Rat c = (jj <= mm) ? ctab[mm][jj] : Rat(0);
            Rat term = Rat(sig[k]) * c;
            if (denominator(term) != 1)
                throw Error("ToleranceViolation", "non-integer ODE coefficient");
            poly[k] = numerator(term);
        }
        spec.A.push_back(std::move(poly));
    }
    // A_{n+1,n} = sigma_{n,n} nu^n
    std::vector<Int> last(n + 1, Int(0));
    last[n] = sig[n];
    spec.A.push_back(std::move(last));
    return spec;
}

Rat en_coefficient(int n, int m) {
    Int f = factorial(m);
    Int d = 1;
    for (int k = 0; k < n; ++k) d *= f;
    Rat c(1, d);
    if (m % 2 == 1) c = -c;
    return c;
}

SeriesValue en_eval(int n, double z, int terms) {
    check_range(terms, 1, 500, "terms");
    SeriesValue out;
    double base = z / n;
    for (int m = 0; m < terms; ++m)
        out.value += to_double(en_coefficient(n, m)) * std::pow(base, n * m);
    out.tail_bound = std::abs(to_double(en_coefficient(n, terms)) * std::pow(base, n * terms));
    return out;
}

SeriesValue fn_eval(int n, const std::vector<double>& x, int terms) {
    check_range(terms, 1, 500, "terms");
    if (static_cast<int>(x.size()) != n) throw Error("RangeError", "fn_eval: wrong arity");
    double prod = 1.0;
    for (double v : x) prod *= v;
    SeriesValue out;
    for (int m = 0; m < terms; ++m)
        out.value += to_double(en_coefficient(n, m)) * std::pow(prod, m);
    out.tail_bound = std::abs(to_double(en_coefficient(n, terms)) * std::pow(prod, terms));
    return out;
}

std::vector<Rat> yp_ratio_coeffs(int n, const Rat& nu, int p, int terms) {
    check_range(n, 2, 30, "n");
    check_range(terms, 1, 500, "terms");
    if (p < 0 || p >= n) throw Error("RangeError", "p must lie in [0, n-1]");
    // non-resonance: exponents nu(1-in) must not differ by an integer,
    // i.e. nu*n*(i-j) not an integer for i != j
    for (int d = 1; d < n; ++d) {
        Rat diff = nu * n * d;
        if (denominator(diff) == 1)
            throw Error("ResonantExponents", "indicial roots differ by an integer");
    }
    // Gamma-argument admissibility: j*nu+1 off nonpositive integers
    for (int j = -p; j <= n - 1 - p; ++j) {
        if (j == 0) continue;
        Rat a = nu * j + 1;
        if (denominator(a) == 1 && numerator(a) <= 0)
            throw Error("GammaPole", "Gamma argument at a nonpositive integer");
    }
    std::vector<Rat> r(terms);
    r[0] = 1;
    for (int h = 1; h < terms; ++h) {
        // r_h = -r_{h-1} / (h * prod_{j != 0} (j nu + h))
        Rat den = h;
        for (int j = -p; j <= n - 1 - p; ++j) {
            if (j == 0) continue;
            Rat f = nu * j + h;
            if (f == 0) throw Error("GammaPole", "vanishing Pochhammer factor");
            den *= f;
        }
        r[h] = -r[h - 1] / den;
    }
    return r;
}

SeriesValue yp_eval(int n, const Rat& nu, int p, double x, int terms) {
    auto r = yp_ratio_coeffs(n, nu, p, terms);
    double mu = to_double(nu) * (1.0 - p * n);
    double base = x / n;
    double pref = std::pow(base, mu);
    for (int j = -p; j <= n - 1 - p; ++j) {
        if (j == 0) continue;
        pref /= boost::math::tgamma(to_double(nu) * j + 1.0);
    }
    SeriesValue out;
    double t = std::pow(base, n);
    for (int h = 0; h < terms; ++h) out.value += to_double(r[h]) * std::pow(t, h);
    out.value *= pref;
    // first omitted ratio term
    Rat den = terms;
    for (int j = -p; j <= n - 1 - p; ++j)
        if (j != 0) den *= (nu * j + terms);
    out.tail_bound = std::abs(to_double(r[terms - 1] / den) * std::pow(t, terms) * pref);
    return out;
}

SeriesValue l_eval(int n, const Rat& nu, double x, int terms) {
    return yp_eval(n, nu, 0, x, terms);
}

SeriesValue hyp0f_eval(int n, const Rat& nu, double t, int terms) {
    check_range(terms, 1, 500, "terms");
    SeriesValue out;
    Rat c = 1;
    for (int h = 0; h < terms; ++h) {
        out.value += to_double(c) * std::pow(t, h);
        Rat den = h + 1;
        for (int j = 1; j < n; ++j) {
            Rat f = nu * j + h + 1;
            if (f == 0) throw Error("GammaPole", "vanishing Pochhammer factor");
            den *= f;
        }
        c /= den;
    }
    out.tail_bound = std::abs(to_double(c) * std::pow(t, terms));
    return out;
}

double ode_residual(int n, const Rat& nu, int p, const std::vector<double>& grid, int terms) {
    auto spec = ode_coeffs(n);
    auto r = yp_ratio_coeffs(n, nu, p, terms);
    Rat mu = nu * (1 - p * n);
    double nu_d = to_double(nu);

    // A_{r,n}(nu) as exact rationals
    std::vector<Rat> a(n + 1);
    for (int i = 0; i <= n; ++i) {
        Rat v = 0, pw = 1;
        for (std::size_t k = 0; k < spec.A[i].size(); ++k) {
            v += Rat(spec.A[i][k]) * pw;
            pw *= nu;
        }
        a[i] = v;
    }

    double worst = 0.0;
    for (double x : grid) {
        double base = x / n;
        double lhs = 0.0, scale = 0.0;
        for (int h = 0; h < terms; ++h) {
            Rat s = mu + Rat(h) * n; // exponent of (x/n)
            // y-term h contributes to each operator piece
            // A_{r} x^{n+1-r} y^{(n+1-r)}: d^k/dx^k (x/n)^s = ff(s,k) n^{-k} (x/n)^{s-k}
            for (int rr = 1; rr <= n; ++rr) {
                int k = n + 1 - rr;
                Rat ff = 1;
                for (int t = 0; t < k; ++t) ff *= (s - t);
                Rat coef = a[rr - 1] * r[h] * ff;
                double term = to_double(coef) * std::pow(x, k) * std::pow(n, -k) *
                              std::pow(base, to_double(Rat(s - k)));
                lhs += term;
                scale = std::max(scale, std::abs(term));
            }
            // (A_{n+1} + x^n) y
            double yterm = to_double(r[h]) * std::pow(base, to_double(s));
            double t1 = to_double(a[n]) * yterm;
            double t2 = std::pow(x, n) * yterm;
            lhs += t1 + t2;
            scale = std::max({scale, std::abs(t1), std::abs(t2)});
        }
        if (scale > 0) worst = std::max(worst, std::abs(lhs) / scale);
    }
    return worst;
}

DenominatorBoundReport efun_denominator_bound(int n, const Rat& nu, int terms) {
    check_range(n, 2, 30, "n");
    check_range(terms, 1, 200, "M");
    Int q = denominator(nu);
    // f(z) = 0F_{n-1}(nu+1,..,(n-1)nu+1; -(z/n)^n) = sum_m c_m z^{nm},
    // a_{nm} = c_m (nm)!; all other a_k = 0.
    Rat c = 1;
    Int bound_base = 1;
    for (int k = 0; k < n; ++k) bound_base *= n;
    for (int k = 1; k < n; ++k) bound_base *= q;

    DenominatorBoundReport rep;
    rep.divisibility_ok = true;
    Int lcm_den = 1;
    Int pw = 1; // (n^n q^{n-1})^m
    Int npow = 1;
    for (int m = 0; m <= terms; ++m) {
        if (m > 0) {
            Rat den = m;
            for (int j = 1; j < n; ++j) {
                Rat f = nu * j + m;
                if (f == 0) throw Error("GammaPole", "vanishing Pochhammer factor");
                den *= f;
            }
            c = -c / den;
            pw *= bound_base;
            for (int k = 0; k < n; ++k) npow *= n; // n^{nm} from (z/n)^{nm}
        }
        Rat anm = c * Rat(factorial(n * m), npow);
        Int d = denominator(anm);
        if (pw % d != 0 && rep.divisibility_ok) {
            rep.divisibility_ok = false;
            rep.witness_m = m;
        }
        lcm_den = boost::multiprecision::lcm(lcm_den, d);
        if (m > 0 && lcm_den > 1) {
            double rate = (static_cast<double>(boost::multiprecision::msb(lcm_den)) + 1.0) *
                          std::log(2.0) / m;
            if (rate > rep.max_log_den_rate) {
                rep.max_log_den_rate = rate;
                if (rep.divisibility_ok) rep.witness_m = m;
            }
        }
    }
    return rep;
}

double bracket_apply(const RealFn& f, const std::vector<double>& x0, int r,
                     const std::vector<double>& x) {
    int n = static_cast<int>(x.size());
    if (static_cast<int>(x0.size()) != n) throw Error("RangeError", "bracket_apply: arity");
    if (r < 0 || r > n) throw Error("RangeError", "bracket order r must lie in [0, n]");
    double sum = 0.0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int bits = __builtin_popcount(mask);
        if (bits > r) continue;
        std::vector<double> pt = x;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) pt[i] = x0[i];
        sum += (bits % 2 == 0 ? 1.0 : -1.0) * f(pt);
    }
    return sum;
}

} // namespace frobdet
