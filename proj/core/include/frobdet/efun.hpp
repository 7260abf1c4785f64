#pragma once

#include <functional>
#include <vector>

#include "frobdet/numbers.hpp"

namespace frobdet {

/// s_{k,n} with x(x-1)...(x-n+1) = x^n - s_1 x^{n-1} + s_2 x^{n-2} - ...;
/// returns {s_{1,n}, ..., s_{n-1,n}} (empty for n = 1). 1 <= n <= 30.
std::vector<Int> falling_factorial_coeffs(int n);

struct HilbertCoeffs {
    std::vector<Int> A; // A[j] for j = 0..n, A_{n,j} = Delta^j x^n | 0
    std::vector<Rat> C; // C[j] = A[j]/j!
};

/// Computed by both the recurrence and the finite-difference formula; the two
/// must agree exactly. Also verifies the mixed Stirling identity for all
/// valid (q, i). 1 <= n <= 30.
HilbertCoeffs hilbert_c_coeffs(int n);

/// Integer sigma_{h,n} with prod_{i=0}^{n-1}(z - nu(1-in)) = sum sigma_h nu^h z^{n-h}.
std::vector<Int> sigma_coeffs(int n);

struct OdeSpec {
    int n = 0;
    // A[r-1] lists the coefficients of A_{r,n} as a polynomial in nu,
    // constant term first; A.back() is A_{n+1,n} = sigma_{n,n} nu^n.
    std::vector<std::vector<Int>> A;
};

OdeSpec ode_coeffs(int n); // 1 <= n <= 20

struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0; // magnitude of the first omitted term
};

/// E_n(z) = sum (-1)^m (z/n)^{nm} / (m!)^n.
SeriesValue en_eval(int n, double z, int terms);
Rat en_coefficient(int n, int m); // coefficient of (z/n)^{nm}

/// F_n(x_1..x_n) = sum (-1)^m (x_1...x_n)^m / (m!)^n.
SeriesValue fn_eval(int n, const std::vector<double>& x, int terms);

/// Exact ratio coefficients r_h = c_h / c_0 of Y_p; r_0 = 1. Throws
/// ResonantExponents / GammaPole on degenerate parameters.
std::vector<Rat> yp_ratio_coeffs(int n, const Rat& nu, int p, int terms);

/// Y_p(x) per the fundamental-system series; x > 0.
SeriesValue yp_eval(int n, const Rat& nu, int p, double x, int terms);

/// L_{nu,n}(x) = Y_0(x).
SeriesValue l_eval(int n, const Rat& nu, double x, int terms);

/// 0F_{n-1}(nu+1, ..., (n-1)nu+1; t) by direct series.
SeriesValue hyp0f_eval(int n, const Rat& nu, double t, int terms);

/// Max relative residual of the generalized Bessel ODE on Y_p over the grid.
double ode_residual(int n, const Rat& nu, int p, const std::vector<double>& grid, int terms);

struct DenominatorBoundReport {
    bool divisibility_ok = false; // den(a_{nm}) | (n^n q^{n-1})^m for all m <= M
    double max_log_den_rate = 0.0; // max over m of log(den(a_0..a_{nm}))/m
    int witness_m = 0;
};

/// E-function denominator growth for 0F_{n-1}(nu+1..; -(z/n)^n) written as
/// sum a_k z^k / k!.
DenominatorBoundReport efun_denominator_bound(int n, const Rat& nu, int terms);

using RealFn = std::function<double(const std::vector<double>&)>;

/// [f]_r: inclusion-exclusion over coordinate subsets of size <= r.
double bracket_apply(const RealFn& f, const std::vector<double>& x0, int r,
                     const std::vector<double>& x);

} // namespace frobdet
