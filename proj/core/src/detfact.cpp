#include "frobdet/detfact.hpp"

#include <numbers>

#include <Eigen/Dense>

namespace frobdet {

SparsePoly<Rat> expand_group_det(const FiniteGroup& g) {
    if (g.n > 8) throw Error("OrderTooLarge", "Leibniz expansion caps at n=8");
    const int n = g.n;
    // variable index of matrix entry (row, col)
    auto var = [&](int row, int col) { return g.mul(row, g.inv(col)); };

    SparsePoly<Rat> out(n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    int sign = 1;
    auto emit = [&]() {
        std::vector<int> e(n, 0);
        for (int row = 0; row < n; ++row) e[var(row, perm[row])] += 1;
        out.add_term(std::move(e), Rat(sign));
    };
    // Heap's algorithm; every swap flips the permutation sign.
    std::vector<int> c(n, 0);
    emit();
    int i = 0;
    while (i < n) {
        if (c[i] < i) {
            std::swap(perm[i % 2 == 0 ? 0 : c[i]], perm[i]);
            sign = -sign;
            emit();
            ++c[i];
            i = 0;
        } else {
            c[i] = 0;
            ++i;
        }
    }
    return out;
}

DedekindFactorization dedekind_factorization(const FiniteGroup& g) {
    if (!g.is_abelian()) throw Error("NotAbelian", "Dedekind factorization needs abelian G");
    if (g.n > 8) throw Error("OrderTooLarge", "verification expansion caps at n=8");
    CharacterTable t = abelian_characters(g);
    const unsigned m = static_cast<unsigned>(g.exponent);

    DedekindFactorization out;
    SparsePoly<Cyclotomic> prod = SparsePoly<Cyclotomic>::constant(g.n, Cyclotomic::one(m));
    for (int i = 0; i < g.n; ++i) {
        LinearForm f;
        SparsePoly<Cyclotomic> lin(g.n);
        for (int a = 0; a < g.n; ++a) {
            Cyclotomic c = t.exact_at(i, a);
            f.coeffs.push_back(c);
            std::vector<int> e(g.n, 0);
            e[a] = 1;
            lin.add_term(std::move(e), std::move(c));
        }
        out.factors.push_back(std::move(f));
        prod = prod * lin;
    }

    SparsePoly<Rat> expansion = expand_group_det(g);
    SparsePoly<Rat> reduced(g.n);
    for (const auto& [e, c] : prod.terms) {
        if (!c.is_rational())
            throw Error("FactorizationMismatch", "non-rational coefficient in the product");
        reduced.add_term(e, c.rational_part());
    }
    if (!(reduced == expansion))
        throw Error("FactorizationMismatch", "product does not equal the Leibniz expansion");
    out.verified = true;
    return out;
}

CD circulant_eval(const std::vector<CD>& coeffs) {
    const std::size_t n = coeffs.size();
    CD prod(1.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        CD omega = std::polar(1.0, 2.0 * std::numbers::pi * j / n);
        CD sum(0.0, 0.0);
        CD w(1.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            sum += w * coeffs[k];
            w *= omega;
        }
        prod *= sum;
    }
    return prod;
}

Rat rational_det(std::vector<std::vector<Rat>> m) {
    const int n = static_cast<int>(m.size());
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (m[row][col] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rat f = m[row][col] / m[col][col];
            for (int k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

IsotypicDecomposition isotypic_block_dets(const FiniteGroup& g, const CharacterTable& table,
                                          const std::vector<CD>& coeffs) {
    const int n = g.n;
    const int s = static_cast<int>(table.degrees.size());

    // left regular representation R_t[a][b] = [a = t*b]; M = sum_t a_t R_t
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
    for (int t = 0; t < n; ++t)
        for (int b = 0; b < n; ++b) M(g.mul(t, b), b) += coeffs[t];

    Eigen::MatrixXcd U(n, n);
    std::vector<int> block_sizes;
    int col = 0;
    for (int i = 0; i < s; ++i) {
        Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(n, n);
        for (int t = 0; t < n; ++t) {
            CD w = std::conj(table.value_at(i, t)) * static_cast<double>(table.degrees[i]) /
                   static_cast<double>(n);
            for (int b = 0; b < n; ++b) P(g.mul(t, b), b) += w;
        }
        // orthonormal image basis: pivoted column selection + Gram-Schmidt
        const int want = table.degrees[i] * table.degrees[i];
        std::vector<Eigen::VectorXcd> basis;
        std::vector<bool> used(n, false);
        for (int k = 0; k < want; ++k) {
            int best = -1;
            double best_norm = 0.0;
            Eigen::VectorXcd best_v;
            for (int c = 0; c < n; ++c) {
                if (used[c]) continue;
                Eigen::VectorXcd v = P.col(c);
                for (const auto& b : basis) v -= b.dot(v) * b;
                double nn = v.norm();
                if (nn > best_norm) {
                    best_norm = nn;
                    best = c;
                    best_v = v / nn;
                }
            }
            if (best < 0 || best_norm < 1e-10)
                throw Error("ProjectorRankMismatch",
                            "rank of projector " + std::to_string(i) + " below " +
                                std::to_string(want));
            used[best] = true;
            basis.push_back(best_v);
        }
        // residual column mass beyond the selected rank means rank > f_i^2
        double extra = 0.0;
        for (int c = 0; c < n; ++c) {
            Eigen::VectorXcd v = P.col(c);
            for (const auto& b : basis) v -= b.dot(v) * b;
            extra = std::max(extra, v.norm());
        }
        if (extra > 1e-8)
            throw Error("ProjectorRankMismatch",
                        "rank of projector " + std::to_string(i) + " above " + std::to_string(want));
        for (const auto& b : basis) U.col(col++) = b;
        block_sizes.push_back(want);
    }
    if (col != n) throw Error("ProjectorRankMismatch", "block sizes do not sum to n");

    Eigen::MatrixXcd A = U.adjoint() * M * U;
    IsotypicDecomposition out;
    double scale = std::max(1.0, A.norm());
    double leak = 0.0;
    int off = 0;
    for (int i = 0; i < s; ++i) {
        int sz = block_sizes[i];
        for (int r = 0; r < n; ++r)
            for (int c = off; c < off + sz; ++c)
                if (r < off || r >= off + sz) leak = std::max(leak, std::abs(A(r, c)));
        IsotypicBlock b;
        b.degree = table.degrees[i];
        b.det = Eigen::MatrixXcd(A.block(off, off, sz, sz)).determinant();
        out.blocks.push_back(b);
        off += sz;
    }
    out.offblock_mass = leak / scale;
    if (out.offblock_mass > 1e-8) throw Error("BlockLeakage", "off-block mass above tolerance");
    out.total_det = M.determinant();
    return out;
}

S3Phi s3_phi_eval(const std::vector<Rat>& x) {
    S3Phi p;
    p.phi1 = x[0] + x[1] + x[2] + x[3] + x[4] + x[5];
    p.phi2 = x[0] + x[1] + x[2] - x[3] - x[4] - x[5];
    p.phi3 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - x[3] * x[3] - x[4] * x[4] - x[5] * x[5] -
             x[0] * x[1] - x[0] * x[2] - x[1] * x[2] + x[3] * x[4] + x[3] * x[5] + x[4] * x[5];
    return p;
}

} // namespace frobdet
