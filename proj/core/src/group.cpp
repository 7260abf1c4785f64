#include "frobdet/group.hpp"

#include <algorithm>
#include <numeric>

namespace frobdet {

bool FiniteGroup::is_abelian() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (table[i][j] != table[j][i]) return false;
    return true;
}

int FiniteGroup::element_order(int g) const {
    int k = 1;
    int p = g;
    while (p != 0) {
        p = mul(p, g);
        ++k;
    }
    return k;
}

FiniteGroup make_group(std::vector<std::vector<int>> table,
                       std::vector<std::string> names) {
    FiniteGroup g;
    g.n = static_cast<int>(table.size());
    if (g.n == 0) throw Error("BadFormat", "empty table");
    for (int i = 0; i < g.n; ++i) {
        if (static_cast<int>(table[i].size()) != g.n)
            throw Error("BadFormat", "row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < g.n; ++j)
            if (table[i][j] < 0 || table[i][j] >= g.n)
                throw Error("BadFormat", "entry (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") out of range");
    }
    // Latin square
    for (int i = 0; i < g.n; ++i) {
        std::vector<bool> row(g.n, false), col(g.n, false);
        for (int j = 0; j < g.n; ++j) {
            if (row[table[i][j]])
                throw Error("NonLatinSquare", "duplicate value in row " + std::to_string(i) +
                                                  " at column " + std::to_string(j));
            row[table[i][j]] = true;
            if (col[table[j][i]])
                throw Error("NonLatinSquare", "duplicate value in column " + std::to_string(i) +
                                                  " at row " + std::to_string(j));
            col[table[j][i]] = true;
        }
    }
    // Identity at index 0
    for (int j = 0; j < g.n; ++j) {
        if (table[0][j] != j || table[j][0] != j)
            throw Error("NoIdentity", "index 0 is not a two-sided identity at " + std::to_string(j));
    }
    // Associativity
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            for (int k = 0; k < g.n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw Error("NonAssociative",
                                "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(k) + ")");
    g.table = std::move(table);
    // Inverses (guaranteed by Latin square + identity + associativity)
    g.inverse.assign(g.n, -1);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (g.table[i][j] == 0) g.inverse[i] = j;
    if (names.empty()) {
        for (int i = 0; i < g.n; ++i) names.push_back("g" + std::to_string(i));
    } else if (static_cast<int>(names.size()) != g.n) {
        throw Error("BadFormat", "names length does not match n");
    }
    g.names = std::move(names);
    g.exponent = 1;
    for (int i = 0; i < g.n; ++i)
        g.exponent = std::lcm(g.exponent, g.element_order(i));
    return g;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
    ConjugacyClasses cc;
    cc.class_of.assign(g.n, -1);
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < g.n; ++i) {
        if (cc.class_of[i] >= 0) continue;
        std::vector<int> orbit;
        std::vector<bool> seen(g.n, false);
        for (int t = 0; t < g.n; ++t) {
            int c = g.conj(i, t);
            if (!seen[c]) {
                seen[c] = true;
                orbit.push_back(c);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        for (int e : orbit) cc.class_of[e] = static_cast<int>(classes.size());
        classes.push_back(std::move(orbit));
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    cc.classes = std::move(classes);
    cc.r = static_cast<int>(cc.classes.size());
    for (int ci = 0; ci < cc.r; ++ci)
        for (int e : cc.classes[ci]) cc.class_of[e] = ci;
    return cc;
}

} // namespace frobdet
