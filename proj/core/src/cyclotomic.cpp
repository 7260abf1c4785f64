#include "frobdet/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numbers>

namespace frobdet {

namespace {

// Exact division of integer polynomials (low-to-high coefficients), divisor monic.
std::vector<Int> divide_monic(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> rem = num;
    std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
    for (std::size_t i = num.size(); i-- >= den.size();) {
        Int c = rem[i];
        if (c == 0) {
            if (i + 1 == den.size()) break;
            continue;
        }
        std::size_t shift = i + 1 - den.size();
        quot[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j) rem[shift + j] -= c * den[j];
        if (i + 1 == den.size()) break;
    }
    return quot;
}

std::map<unsigned, std::vector<Int>> g_phi_cache;
std::mutex g_phi_mutex;

std::vector<Int> compute_phi(unsigned m);

const std::vector<Int>& phi_cached(unsigned m) {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(m);
    if (it != g_phi_cache.end()) return it->second;
    auto ins = g_phi_cache.emplace(m, compute_phi(m));
    return ins.first->second;
}

// Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d
std::vector<Int> compute_phi(unsigned m) {
    if (m == 1) return {Int(-1), Int(1)};
    std::vector<Int> num(m + 1, Int(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        std::vector<Int> pd;
        {
            // avoid recursive lock
            std::vector<Int>* cached = nullptr;
            {
                auto it = g_phi_cache.find(d);
                if (it != g_phi_cache.end()) cached = &it->second;
            }
            pd = cached ? *cached : compute_phi(d);
            g_phi_cache.emplace(d, pd);
        }
        num = divide_monic(num, pd);
    }
    return num;
}

} // namespace

const std::vector<Int>& Cyclotomic::cyclotomic_polynomial(unsigned m) {
    return phi_cached(m);
}

std::size_t Cyclotomic::degree(unsigned m) {
    return cyclotomic_polynomial(m).size() - 1;
}

Cyclotomic::Cyclotomic(unsigned m, Rat constant) : m_(m), c_(degree(m), Rat(0)) {
    c_[0] = std::move(constant);
}

std::vector<Rat> Cyclotomic::reduce(unsigned m, std::vector<Rat> poly) {
    const auto& phi = cyclotomic_polynomial(m);
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > d;) {
        Rat c = poly[i];
        if (c == 0) continue;
        poly[i] = 0;
        for (std::size_t j = 0; j < d; ++j) poly[i - d + j] -= c * Rat(phi[j]);
    }
    poly.resize(d, Rat(0));
    if (poly.size() < d) poly.resize(d, Rat(0));
    return poly;
}

Cyclotomic Cyclotomic::root_power(unsigned m, long k) {
    long kk = ((k % static_cast<long>(m)) + m) % static_cast<long>(m);
    std::vector<Rat> poly(static_cast<std::size_t>(kk) + 1, Rat(0));
    poly.back() = 1;
    Cyclotomic out;
    out.m_ = m;
    out.c_ = reduce(m, std::move(poly));
    return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Cyclotomic out = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] += o.c_[i];
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    Cyclotomic out = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] -= o.c_[i];
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    std::vector<Rat> prod(2 * c_.size(), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    Cyclotomic out;
    out.m_ = m_;
    out.c_ = reduce(m_, std::move(prod));
    return out;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    return m_ == o.m_ && c_ == o.c_;
}

Cyclotomic Cyclotomic::galois(long k) const {
    std::vector<Rat> poly(m_, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        std::size_t target = (i * static_cast<std::size_t>(((k % m_) + m_) % m_)) % m_;
        poly[target] += c_[i];
    }
    Cyclotomic out;
    out.m_ = m_;
    out.c_ = reduce(m_, std::move(poly));
    return out;
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

CD Cyclotomic::to_complex() const {
    CD out(0.0, 0.0);
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double ang = two_pi * static_cast<double>(i) / m_;
        out += to_double(c_[i]) * CD(std::cos(ang), std::sin(ang));
    }
    return out;
}

} // namespace frobdet
