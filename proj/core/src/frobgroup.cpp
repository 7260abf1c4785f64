#include "frobdet/frobgroup.hpp"

#include <algorithm>

#include "frobdet/detfact.hpp"

namespace frobdet {

template <class T>
static std::vector<T> convolve_impl(const FiniteGroup& g, const std::vector<T>& a,
                                    const std::vector<T>& b) {
    if (static_cast<int>(a.size()) != g.n || static_cast<int>(b.size()) != g.n)
        throw Error("BadFormat", "convolve: coefficient vector length must equal group order");
    std::vector<T> c(g.n, T(0));
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v) c[g.mul(u, v)] += a[u] * b[v];
    return c;
}

std::vector<Rat> convolve(const FiniteGroup& g, const std::vector<Rat>& a,
                          const std::vector<Rat>& b) {
    return convolve_impl(g, a, b);
}

std::vector<CD> convolve(const FiniteGroup& g, const std::vector<CD>& a, const std::vector<CD>& b) {
    return convolve_impl(g, a, b);
}

std::vector<std::vector<Rat>> frobenius_matrix_rat(const FiniteGroup& g,
                                                   const std::vector<Rat>& a) {
    return frobenius_matrix(g, a);
}

std::vector<Rat> frobenius_inverse(const FiniteGroup& g, const std::vector<Rat>& a) {
    if (static_cast<int>(a.size()) != g.n)
        throw Error("BadFormat", "frobenius_inverse: coefficient vector length must equal order");
    SparsePoly<Rat> theta = expand_group_det(g); // throws OrderTooLarge for n > 8
    Rat one(1);
    Rat d = theta.eval(a, one);
    if (d == 0) throw Error("SingularFrobenius", "group determinant vanishes at the given vector");
    std::vector<Rat> u(g.n);
    for (int w = 0; w < g.n; ++w) {
        Rat grad = theta.derivative(g.inv(w)).eval(a, one);
        u[w] = grad / (Rat(g.n) * d);
    }
    return u;
}

LieGenerators lie_generators(const FiniteGroup& g) {
    LieGenerators out;
    out.mats.assign(g.n, std::vector<std::vector<int>>(g.n, std::vector<int>(g.n, 0)));
    for (int k = 0; k < g.n; ++k)
        for (int p = 0; p < g.n; ++p) out.mats[k][p][g.mul(p, k)] = 1;
    return out;
}

static std::vector<std::vector<int>> mat_mul(const std::vector<std::vector<int>>& a,
                                             const std::vector<std::vector<int>>& b) {
    int n = static_cast<int>(a.size());
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

BracketReport bracket_identity_check(const FiniteGroup& g) {
    auto gen = lie_generators(g).mats;
    BracketReport rep;
    for (int k = 0; k < g.n; ++k)
        for (int l = 0; l < g.n; ++l) {
            auto kl = mat_mul(gen[k], gen[l]);
            auto lk = mat_mul(gen[l], gen[k]);
            const auto& alk = gen[g.mul(l, k)];
            const auto& akl = gen[g.mul(k, l)];
            for (int i = 0; i < g.n && rep.ok; ++i)
                for (int j = 0; j < g.n; ++j)
                    if (kl[i][j] - lk[i][j] != alk[i][j] - akl[i][j]) {
                        rep.ok = false;
                        rep.failing_pair = {k, l};
                        break;
                    }
            if (!rep.ok) return rep;
        }
    return rep;
}

int rational_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[rank][c];
            for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

LieStructure center_derived_dims(const FiniteGroup& g) {
    LieStructure out;
    auto cc = conjugacy_classes(g);
    out.r = cc.r;

    // Center basis: class-sum indicator vectors in the e_s coordinates.
    for (const auto& cls : cc.classes) {
        std::vector<Rat> v(g.n, Rat(0));
        for (int s : cls) v[s] = 1;
        out.center_basis.push_back(std::move(v));
    }

    // Derived spanning set: e_q - e_{t^-1 q t}, reduced to a basis.
    std::vector<std::vector<Rat>> span;
    for (int q = 0; q < g.n; ++q)
        for (int t = 0; t < g.n; ++t) {
            int qc = g.conj(q, t);
            if (qc == q) continue;
            std::vector<Rat> v(g.n, Rat(0));
            v[q] = 1;
            v[qc] -= 1;
            span.push_back(std::move(v));
        }
    // reduce span to independent rows
    for (const auto& v : span) {
        auto trial = out.derived_basis;
        trial.push_back(v);
        if (rational_rank(trial) > static_cast<int>(out.derived_basis.size()))
            out.derived_basis.push_back(v);
    }
    out.derived_dim = static_cast<int>(out.derived_basis.size());

    std::vector<std::vector<Rat>> all = out.center_basis;
    all.insert(all.end(), out.derived_basis.begin(), out.derived_basis.end());
    out.direct_sum = (rational_rank(all) == g.n) && (out.r + out.derived_dim == g.n);
    return out;
}

UnitDimsReport unit_dims_check(const FiniteGroup& g, const CharacterTable& table) {
    if (table.degrees.empty())
        throw Error("MissingCharacterTable", "no character table supplied");
    UnitDimsReport rep;
    rep.degrees = table.degrees;
    std::sort(rep.degrees.begin(), rep.degrees.end());
    for (int f : rep.degrees) rep.sum_squares += f * f;
    rep.ok = (rep.sum_squares == g.n);
    return rep;
}

} // namespace frobdet
