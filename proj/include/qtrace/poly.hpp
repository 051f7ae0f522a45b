#pragma once

// Dense univariate polynomials over the exact rationals. Just enough for the
// cyclotomic machinery: arithmetic, division with remainder, extended gcd,
// and the cyclotomic polynomials themselves.

#include <qtrace/rational.hpp>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtrace {

class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(Rational constant) {
        if (constant != 0) coeff_.push_back(std::move(constant));
    }
    explicit RatPoly(std::vector<Rational> ascending) : coeff_(std::move(ascending)) { trim(); }

    static RatPoly monomial(std::size_t degree, Rational c = Rational(1)) {
        if (c == 0) return RatPoly();
        std::vector<Rational> v(degree + 1, Rational(0));
        v[degree] = std::move(c);
        return RatPoly(std::move(v));
    }

    bool is_zero() const { return coeff_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeff_.size()) - 1; }

    const Rational& operator[](std::size_t i) const {
        static const Rational zero(0);
        return i < coeff_.size() ? coeff_[i] : zero;
    }
    const std::vector<Rational>& coefficients() const { return coeff_; }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<Rational> v(std::max(a.coeff_.size(), b.coeff_.size()), Rational(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
        return RatPoly(std::move(v));
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
        std::vector<Rational> v(std::max(a.coeff_.size(), b.coeff_.size()), Rational(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
        return RatPoly(std::move(v));
    }
    friend RatPoly operator-(const RatPoly& a) { return RatPoly() - a; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return RatPoly();
        std::vector<Rational> v(a.coeff_.size() + b.coeff_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeff_.size(); ++i)
            for (std::size_t j = 0; j < b.coeff_.size(); ++j) v[i + j] += a.coeff_[i] * b.coeff_[j];
        return RatPoly(std::move(v));
    }
    friend RatPoly operator*(const RatPoly& a, const Rational& s) {
        std::vector<Rational> v = a.coeff_;
        for (auto& c : v) c *= s;
        return RatPoly(std::move(v));
    }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeff_ == b.coeff_; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = coeff_.size(); i-- > 0;) acc = acc * x + coeff_[i];
        return acc;
    }

    // Quotient and remainder; the divisor must be nonzero.
    friend std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Rational> rem = a.coeff_;
        const long db = b.degree();
        const Rational lead = b.coeff_.back();
        if (static_cast<long>(rem.size()) - 1 < db) return {RatPoly(), a};
        std::vector<Rational> quot(rem.size() - db, Rational(0));
        for (std::size_t i = rem.size(); static_cast<long>(i) - 1 >= db; --i) {
            const std::size_t top = i - 1;
            if (rem[top] == 0) continue;
            Rational q = rem[top] / lead;
            quot[top - db] = q;
            for (long j = 0; j <= db; ++j) rem[top - db + j] -= q * b.coeff_[j];
        }
        return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
    }

  private:
    void trim() {
        while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
    }
    std::vector<Rational> coeff_;  // ascending powers, no trailing zeros
};

// g = gcd(a, b) made monic, with g = u*a + v*b.
struct ExtGcd {
    RatPoly g, u, v;
};

inline ExtGcd ext_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly u0(Rational(1)), u1;
    RatPoly v0, v1(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly u2 = u0 - q * u1;
        RatPoly v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.is_zero()) {
        Rational inv_lead = Rational(1) / r0.coefficients().back();
        r0 = r0 * inv_lead;
        u0 = u0 * inv_lead;
        v0 = v0 * inv_lead;
    }
    return {std::move(r0), std::move(u0), std::move(v0)};
}

// n-th cyclotomic polynomial, computed by exact division of x^n - 1 by the
// cyclotomic polynomials of the proper divisors.
inline const RatPoly& cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, RatPoly> cache;
    if (n == 0) throw std::invalid_argument("cyclotomic index must be positive");
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    RatPoly num = RatPoly::monomial(n) - RatPoly(Rational(1));
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = divmod(num, cyclotomic_polynomial(d));
        if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
        num = std::move(q);
    }
    return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace qtrace
