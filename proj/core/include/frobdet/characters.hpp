#pragma once

#include <optional>
#include <vector>

#include "frobdet/cyclotomic.hpp"
#include "frobdet/group.hpp"

namespace frobdet {

/// Character table over the conjugacy classes of a group.
///
/// values[i][c] is chi_i evaluated on class c. For abelian groups the exact
/// cyclotomic values are also present. Irreducibles are sorted by
/// (degree, lexicographic value tuple); classes by (size, smallest element).
struct CharacterTable {
    ConjugacyClasses classes;
    std::vector<int> degrees;
    std::vector<std::vector<CD>> values;
    std::optional<std::vector<std::vector<Cyclotomic>>> exact_values;
    double tolerance = 1e-9;

    bool exact() const { return exact_values.has_value(); }
    /// chi_i evaluated on group element g.
    CD value_at(int i, int g) const { return values[i][classes.class_of[g]]; }
    const Cyclotomic& exact_at(int i, int g) const {
        return (*exact_values)[i][classes.class_of[g]];
    }
};

/// Exact linear characters of an abelian group, conductor = exponent(G).
/// Throws NotAbelian.
CharacterTable abelian_characters(const FiniteGroup& g);

/// Floating character table by simultaneous diagonalization of the class
/// algebra. Throws DegenerateEigenspaces, ToleranceViolation; requires n <= 64.
CharacterTable character_table_numeric(const FiniteGroup& g, unsigned seed = 42);

/// Ingest an exact-free user table: classes, degrees, complex values.
CharacterTable character_table_from_values(const FiniteGroup& g,
                                           std::vector<std::vector<int>> classes,
                                           std::vector<int> degrees,
                                           std::vector<std::vector<CD>> values);

} // namespace frobdet
