#pragma once

#include <map>
#include <vector>

#include "frobdet/numbers.hpp"

namespace frobdet {

/// Graded-lexicographic monomial order on exponent vectors.
struct GradedLex {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    }
};

/// Exact sparse multivariate polynomial; C is Rat, Cyclotomic or similar.
template <class C>
struct SparsePoly {
    int nvars = 0;
    std::map<std::vector<int>, C, GradedLex> terms;

    explicit SparsePoly(int nv = 0) : nvars(nv) {}

    static SparsePoly constant(int nv, C c) {
        SparsePoly p(nv);
        p.add_term(std::vector<int>(nv, 0), std::move(c));
        return p;
    }
    static SparsePoly variable(int nv, int i, C coeff) {
        SparsePoly p(nv);
        std::vector<int> e(nv, 0);
        e[i] = 1;
        p.add_term(std::move(e), std::move(coeff));
        return p;
    }

    void add_term(std::vector<int> exps, C coeff) {
        if (is_zero_coeff(coeff)) return;
        auto it = terms.find(exps);
        if (it == terms.end()) {
            terms.emplace(std::move(exps), std::move(coeff));
        } else {
            it->second += coeff;
            if (is_zero_coeff(it->second)) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms) {
            int t = 0;
            for (int x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    bool homogeneous(int d) const {
        for (const auto& [e, c] : terms) {
            int t = 0;
            for (int x : e) t += x;
            if (t != d) return false;
        }
        return true;
    }

    SparsePoly operator+(const SparsePoly& o) const {
        SparsePoly out = *this;
        for (const auto& [e, c] : o.terms) out.add_term(e, c);
        return out;
    }
    SparsePoly operator-(const SparsePoly& o) const {
        SparsePoly out = *this;
        for (const auto& [e, c] : o.terms) out.add_term(e, negate(c));
        return out;
    }
    SparsePoly operator*(const SparsePoly& o) const {
        SparsePoly out(nvars);
        for (const auto& [ea, ca] : terms)
            for (const auto& [eb, cb] : o.terms) {
                std::vector<int> e(nvars);
                for (int i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }
    bool operator==(const SparsePoly& o) const { return nvars == o.nvars && terms == o.terms; }

    SparsePoly derivative(int var) const {
        SparsePoly out(nvars);
        for (const auto& [e, c] : terms) {
            if (e[var] == 0) continue;
            std::vector<int> e2 = e;
            e2[var] -= 1;
            C acc = c; // multiply by the small integer e[var]
            for (int k = 1; k < e[var]; ++k) acc += c;
            out.add_term(std::move(e2), std::move(acc));
        }
        return out;
    }

    template <class T>
    T eval(const std::vector<T>& x, T one) const {
        T sum = one - one;
        for (const auto& [e, c] : terms) {
            T t = coeff_as<T>(c, one);
            for (int i = 0; i < nvars; ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            sum += t;
        }
        return sum;
    }

private:
    static bool is_zero_coeff(const Rat& c) { return c == 0; }
    template <class U>
    static bool is_zero_coeff(const U& c) { return c.is_zero(); }
    static Rat negate(const Rat& c) { return -c; }
    template <class U>
    static U negate(const U& c) { return -c; }

    // coefficient embedding into the evaluation type
    template <class T>
    static T coeff_as(const Rat& c, const T& one) {
        if constexpr (std::is_same_v<T, Rat>) {
            (void)one;
            return c;
        } else if constexpr (std::is_same_v<T, CD>) {
            (void)one;
            return CD(to_double(c), 0.0);
        } else {
            return one * c;
        }
    }
    template <class T, class U>
    static T coeff_as(const U& c, const T& one) {
        if constexpr (std::is_same_v<T, U>) {
            (void)one;
            return c;
        } else if constexpr (std::is_same_v<T, CD>) {
            (void)one;
            return c.to_complex();
        } else {
            return one * c;
        }
    }
};

} // namespace frobdet
