#pragma once

#include <string>
#include <vector>

#include "frobdet/numbers.hpp"

namespace frobdet {

/// Finite group given by its Cayley table. Index 0 is the identity.
struct FiniteGroup {
    int n = 0;
    std::vector<std::string> names;
    std::vector<std::vector<int>> table; // table[i][j] = index of S_i * S_j
    std::vector<int> inverse;            // inverse[i] = index of S_i^{-1}
    int exponent = 1;

    int mul(int i, int j) const { return table[i][j]; }
    int inv(int i) const { return inverse[i]; }
    /// Index of the element conjugate t^{-1} g t.
    int conj(int g, int t) const { return mul(mul(inv(t), g), t); }
    bool is_abelian() const;
    int element_order(int g) const;
};

/// Validates the Cayley-table axioms and fills inverse/exponent.
/// Throws Error with codes NonLatinSquare, NonAssociative, NoIdentity, BadFormat.
FiniteGroup make_group(std::vector<std::vector<int>> table,
                       std::vector<std::string> names = {});

struct ConjugacyClasses {
    std::vector<std::vector<int>> classes; // sorted by (size, smallest element)
    std::vector<int> class_of;
    int r = 0;
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

} // namespace frobdet
