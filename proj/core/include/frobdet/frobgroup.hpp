#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "frobdet/characters.hpp"
#include "frobdet/group.hpp"
#include "frobdet/numbers.hpp"

namespace frobdet {

/// Group-law convolution: c_t = sum over uv = t of a_u b_v.
std::vector<Rat> convolve(const FiniteGroup& g, const std::vector<Rat>& a,
                          const std::vector<Rat>& b);
std::vector<CD> convolve(const FiniteGroup& g, const std::vector<CD>& a, const std::vector<CD>& b);

/// n x n matrix with M[i][j] = a[i * j^-1] (same convention as frobenius_matrix).
std::vector<std::vector<Rat>> frobenius_matrix_rat(const FiniteGroup& g, const std::vector<Rat>& a);

/// Convolution inverse via the gradient of the expanded group determinant:
/// U_w = (dD/dX_{w^-1}) / (n D).  convolve(a, U) = delta_e exactly.
std::vector<Rat> frobenius_inverse(const FiniteGroup& g, const std::vector<Rat>& a);

struct LieGenerators {
    // mats[k][p][q] = 1 iff q = p * k; mats[0] = identity.
    std::vector<std::vector<std::vector<int>>> mats;
};

LieGenerators lie_generators(const FiniteGroup& g);

struct BracketReport {
    bool ok = true;
    std::optional<std::pair<int, int>> failing_pair;
};

/// Checks [A_k, A_l] = A_{lk} - A_{kl} for all pairs as exact integer matrices.
BracketReport bracket_identity_check(const FiniteGroup& g);

struct LieStructure {
    int r = 0;           // center dimension = class count
    int derived_dim = 0; // n - r
    std::vector<std::vector<Rat>> center_basis;  // class-sum coefficient vectors
    std::vector<std::vector<Rat>> derived_basis; // reduced spanning set of A_q - A_{t^-1 q t}
    bool direct_sum = false;                     // rank(center u derived) == n
};

LieStructure center_derived_dims(const FiniteGroup& g);

struct UnitDimsReport {
    bool ok = false;
    std::vector<int> degrees;
    int sum_squares = 0;
};

UnitDimsReport unit_dims_check(const FiniteGroup& g, const CharacterTable& table);

/// Rank of a rational matrix by exact Gaussian elimination.
int rational_rank(std::vector<std::vector<Rat>> m);

} // namespace frobdet
