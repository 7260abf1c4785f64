#pragma once

#include "frobdet/characters.hpp"
#include "frobdet/poly.hpp"

namespace frobdet {

/// Leibniz expansion of det(X_{gh^{-1}}) as an exact integer polynomial,
/// homogeneous of degree n in n variables. Requires n <= 8 (OrderTooLarge).
SparsePoly<Rat> expand_group_det(const FiniteGroup& g);

/// One linear factor sum_g chi(g) X_g with exact cyclotomic coefficients.
struct LinearForm {
    std::vector<Cyclotomic> coeffs;
};

struct DedekindFactorization {
    std::vector<LinearForm> factors;
    bool verified = false; // exact product equals the Leibniz expansion
};

/// Abelian splitting into linear factors, verified coefficient-for-coefficient
/// against expand_group_det. Throws NotAbelian, OrderTooLarge,
/// FactorizationMismatch.
DedekindFactorization dedekind_factorization(const FiniteGroup& g);

/// prod over n-th roots of unity of sum_k omega^k c_k.
CD circulant_eval(const std::vector<CD>& coeffs);

/// The Frobenius matrix M[g][h] = a_{g h^{-1}} of a coefficient vector.
template <class T>
std::vector<std::vector<T>> frobenius_matrix(const FiniteGroup& g, const std::vector<T>& a) {
    std::vector<std::vector<T>> m(g.n, std::vector<T>(g.n));
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) m[i][j] = a[g.mul(i, g.inv(j))];
    return m;
}

/// Exact determinant by fraction-free elimination.
Rat rational_det(std::vector<std::vector<Rat>> m);

struct IsotypicBlock {
    int degree = 0;    // f_i
    CD det{0.0, 0.0};  // equals Phi_i(coeffs)^{f_i}
};

struct IsotypicDecomposition {
    std::vector<IsotypicBlock> blocks;
    CD total_det{0.0, 0.0};
    double offblock_mass = 0.0;
};

/// Block determinants of M(coeffs) in a basis adapted to the isotypic
/// projectors P_i = (f_i/n) sum_g conj(chi_i(g)) R(g). Throws
/// ProjectorRankMismatch, BlockLeakage.
IsotypicDecomposition isotypic_block_dets(const FiniteGroup& g, const CharacterTable& table,
                                          const std::vector<CD>& coeffs);

/// Dedekind's explicit S3 factors, evaluated exactly.
struct S3Phi {
    Rat phi1, phi2, phi3;
};
S3Phi s3_phi_eval(const std::vector<Rat>& coeffs);

} // namespace frobdet
