#include "frobdet/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

namespace frobdet {

namespace {

// Deterministic ordering key for a character row: (degree, value tuple on
// classes, compared on rounded (re, im)).
struct RowKey {
    int degree;
    std::vector<std::pair<long long, long long>> snapped;

    bool operator<(const RowKey& o) const {
        if (degree != o.degree) return degree < o.degree;
        return snapped < o.snapped;
    }
};

RowKey make_key(int degree, const std::vector<CD>& row) {
    RowKey k;
    k.degree = degree;
    for (const CD& v : row)
        k.snapped.emplace_back(std::llround(v.real() * 1e6), std::llround(v.imag() * 1e6));
    return k;
}

void check_orthogonality(const FiniteGroup& g, const CharacterTable& t, double tol) {
    const int s = static_cast<int>(t.degrees.size());
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            CD sum(0, 0);
            for (int c = 0; c < t.classes.r; ++c)
                sum += static_cast<double>(t.classes.classes[c].size()) * t.values[i][c] *
                       std::conj(t.values[j][c]);
            CD expect = (i == j) ? CD(static_cast<double>(g.n), 0) : CD(0, 0);
            if (std::abs(sum - expect) > tol * g.n)
                throw Error("ToleranceViolation", "row orthogonality failed at (" +
                                                      std::to_string(i) + "," + std::to_string(j) +
                                                      ")");
        }
}

} // namespace

CharacterTable abelian_characters(const FiniteGroup& g) {
    if (!g.is_abelian()) throw Error("NotAbelian", "abelian_characters needs an abelian group");
    const int n = g.n;
    const unsigned m = static_cast<unsigned>(g.exponent);

    // Floating characters via the regular representation: common eigenvectors
    // of all translation matrices R_t, R_t[a][b] = [a = t b]. Each eigenvector,
    // normalized at the identity, is a character.
    std::mt19937 rng(42);
    std::vector<std::vector<long>> exponents; // chi(g) = zeta_m^{exponents[chi][g]}
    const double snap_tol = 1e-9;
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::uniform_real_distribution<double> dist(0.25, 1.0);
        Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(n, n);
        for (int t = 0; t < n; ++t) {
            double w = dist(rng);
            for (int b = 0; b < n; ++b) T(g.mul(t, b), b) += w;
        }
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(T);
        if (es.info() != Eigen::Success) continue;
        exponents.clear();
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) {
            Eigen::VectorXcd v = es.eigenvectors().col(k);
            if (std::abs(v(0)) < 1e-6) {
                ok = false;
                break;
            }
            v /= v(0);
            std::vector<long> e(n);
            for (int a = 0; a < n && ok; ++a) {
                double ang = std::arg(v(a));
                double pos = ang * m / (2.0 * std::numbers::pi);
                long rounded = std::lround(pos);
                long idx = ((rounded % static_cast<long>(m)) + m) % m;
                double ra = 2.0 * std::numbers::pi * idx / m;
                if (std::abs(v(a) - CD(std::cos(ra), std::sin(ra))) > snap_tol * 1e3) ok = false;
                e[a] = idx;
            }
            if (ok) exponents.push_back(std::move(e));
        }
        if (!ok) continue;
        // exact re-validation: multiplicativity in the exponents
        for (const auto& e : exponents)
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n; ++b)
                    if ((e[a] + e[b]) % m != static_cast<unsigned long>(e[g.mul(a, b)]) % m) {
                        ok = false;
                        break;
                    }
        // distinctness
        if (ok) {
            auto sorted = exponents;
            std::sort(sorted.begin(), sorted.end());
            ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                 static_cast<int>(sorted.size()) == n;
        }
        if (ok) break;
        exponents.clear();
    }
    if (static_cast<int>(exponents.size()) != n)
        throw Error("DegenerateEigenspaces", "could not recover abelian characters");

    CharacterTable t;
    t.classes = conjugacy_classes(g); // singletons, ordered by element index
    t.degrees.assign(n, 1);
    std::vector<std::vector<Cyclotomic>> exact;
    for (const auto& e : exponents) {
        std::vector<Cyclotomic> row;
        for (int c = 0; c < t.classes.r; ++c)
            row.push_back(Cyclotomic::root_power(m, e[t.classes.classes[c][0]]));
        exact.push_back(std::move(row));
    }
    // order rows by exact coefficient vectors (deterministic)
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        for (int c = 0; c < t.classes.r; ++c) {
            const auto& ca = exact[a][c].coeffs();
            const auto& cb = exact[b][c].coeffs();
            if (ca != cb) return ca < cb;
        }
        return false;
    });
    for (int i : order) {
        std::vector<CD> row;
        for (const auto& v : exact[i]) row.push_back(v.to_complex());
        t.values.push_back(std::move(row));
    }
    std::vector<std::vector<Cyclotomic>> exact_sorted;
    for (int i : order) exact_sorted.push_back(exact[i]);
    t.exact_values = std::move(exact_sorted);
    check_orthogonality(g, t, 1e-9);
    return t;
}

CharacterTable character_table_numeric(const FiniteGroup& g, unsigned seed) {
    if (g.n > 64) throw Error("OrderTooLarge", "character_table_numeric caps at n=64");
    const int n = g.n;
    ConjugacyClasses cc = conjugacy_classes(g);
    const int r = cc.r;
    int e_class = cc.class_of[0];

    // class-multiplication matrices: (M_i)_{jk} = #{(x,y) in C_i x C_j : xy = rep_k}
    std::vector<Eigen::MatrixXd> M(r, Eigen::MatrixXd::Zero(r, r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            std::vector<double> cnt(r, 0.0);
            for (int x : cc.classes[i])
                for (int y : cc.classes[j]) cnt[cc.class_of[g.mul(x, y)]] += 1.0;
            // product lands |C_k| times on each element of class k
            for (int k = 0; k < r; ++k) M[i](j, k) = cnt[k] / cc.classes[k].size();
        }

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const double tol = 1e-9;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(r, r);
        for (int i = 0; i < r; ++i) T += CD(dist(rng), dist(rng)) * M[i];
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(T);
        if (es.info() != Eigen::Success) continue;

        bool ok = true;
        std::vector<std::vector<CD>> rows;
        std::vector<int> degs;
        for (int k = 0; k < r && ok; ++k) {
            Eigen::VectorXcd u = es.eigenvectors().col(k);
            if (std::abs(u(e_class)) < 1e-8) {
                ok = false;
                break;
            }
            u /= u(e_class);
            // central-character values omega_i: eigenvalue of M_i on u
            std::vector<CD> omega(r);
            int pivot = 0;
            for (int a = 1; a < r; ++a)
                if (std::abs(u(a)) > std::abs(u(pivot))) pivot = a;
            double osum = 0.0;
            for (int i = 0; i < r; ++i) {
                Eigen::VectorXcd w = M[i] * u;
                omega[i] = w(pivot) / u(pivot);
                if ((w - omega[i] * u).norm() > 1e-6 * (1.0 + w.norm())) ok = false;
                osum += std::norm(omega[i]) / cc.classes[i].size();
            }
            if (!ok) break;
            double f = std::sqrt(n / osum);
            int fi = static_cast<int>(std::lround(f));
            if (fi < 1 || std::abs(f - fi) > 1e-6) {
                ok = false;
                break;
            }
            std::vector<CD> chi(r);
            for (int i = 0; i < r; ++i)
                chi[i] = static_cast<double>(fi) * omega[i] / static_cast<double>(cc.classes[i].size());
            rows.push_back(std::move(chi));
            degs.push_back(fi);
        }
        if (!ok) continue;

        long long sumsq = 0;
        for (int d : degs) sumsq += static_cast<long long>(d) * d;
        if (sumsq != n) continue;

        CharacterTable t;
        t.classes = cc;
        std::vector<int> order(r);
        for (int i = 0; i < r; ++i) order[i] = i;
        std::vector<RowKey> keys;
        for (int i = 0; i < r; ++i) keys.push_back(make_key(degs[i], rows[i]));
        std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
        for (int i : order) {
            t.degrees.push_back(degs[i]);
            t.values.push_back(rows[i]);
        }
        try {
            check_orthogonality(g, t, tol);
        } catch (const Error&) {
            continue;
        }
        return t;
    }
    throw Error("DegenerateEigenspaces", "random-recombination retries exhausted");
}

CharacterTable character_table_from_values(const FiniteGroup& g,
                                           std::vector<std::vector<int>> classes,
                                           std::vector<int> degrees,
                                           std::vector<std::vector<CD>> values) {
    CharacterTable t;
    ConjugacyClasses cc = conjugacy_classes(g);
    // the supplied classes must match the computed partition
    std::vector<std::vector<int>> supplied = classes;
    for (auto& c : supplied) std::sort(c.begin(), c.end());
    std::sort(supplied.begin(), supplied.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    if (supplied != cc.classes)
        throw Error("BadFormat", "supplied classes do not match the conjugacy partition");
    t.classes = cc;
    t.degrees = std::move(degrees);
    t.values = std::move(values);
    long long sumsq = 0;
    for (int d : t.degrees) sumsq += static_cast<long long>(d) * d;
    if (sumsq != g.n) throw Error("ToleranceViolation", "sum of squared degrees != n");
    check_orthogonality(g, t, 1e-9);
    return t;
}

} // namespace frobdet
