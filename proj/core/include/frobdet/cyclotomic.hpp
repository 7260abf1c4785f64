#pragma once

#include <vector>

#include "frobdet/numbers.hpp"

namespace frobdet {

/// Exact element of Q(zeta_m), stored as a residue modulo the m-th
/// cyclotomic polynomial in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
class Cyclotomic {
public:
    Cyclotomic() : m_(1), c_(1, Rat(0)) {}
    Cyclotomic(unsigned m, Rat constant);

    static Cyclotomic zero(unsigned m) { return Cyclotomic(m, Rat(0)); }
    static Cyclotomic one(unsigned m) { return Cyclotomic(m, Rat(1)); }
    /// zeta_m^k
    static Cyclotomic root_power(unsigned m, long k);

    unsigned conductor() const { return m_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Galois action zeta -> zeta^k; requires gcd(k, m) = 1.
    Cyclotomic galois(long k) const;
    /// Complex conjugate, zeta -> zeta^{-1}.
    Cyclotomic conj() const { return galois(static_cast<long>(m_) - 1); }

    bool is_zero() const;
    /// True when all non-constant power-basis coefficients vanish.
    bool is_rational() const;
    Rat rational_part() const { return c_[0]; }

    CD to_complex() const;

    /// Degree of Phi_m (exposed for tests).
    static std::size_t degree(unsigned m);
    /// Monic integer coefficient list of Phi_m, low to high.
    static const std::vector<Int>& cyclotomic_polynomial(unsigned m);

private:
    unsigned m_;
    std::vector<Rat> c_; // size degree(m_)

    static std::vector<Rat> reduce(unsigned m, std::vector<Rat> poly);
};

} // namespace frobdet
