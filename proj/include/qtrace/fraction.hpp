#pragma once

// Fractions over a commutative ring. No gcd normalization is attempted:
// equality is decided by cross-multiplication, which only needs ring
// multiplication and equality. A per-ring `reduce_fraction` hook may divide
// numerator and denominator by a common unit to keep sizes in check.

#include <qtrace/laurent.hpp>

#include <stdexcept>
#include <utility>

namespace qtrace {

struct NotInvertible : std::runtime_error {
    explicit NotInvertible(const std::string& what) : std::runtime_error(what) {}
};

// Default hook: no reduction.
template <typename R>
inline void reduce_fraction(R&, R&) {}

// Laurent fractions: scale so the denominator has minimal exponent zero and
// rational content one. Multiplying numerator and denominator by the same
// unit leaves the fraction unchanged.
inline void reduce_fraction(LaurentPoly& num, LaurentPoly& den) {
    ExpVec shift = den.min_exponents();
    Rational content = den.content();
    den.divide_unit(content, shift);
    num.divide_unit(content, shift);
}

template <typename R>
class Fraction {
  public:
    Fraction() = default;
    explicit Fraction(R value) : num_(std::move(value)), den_(num_.one_like()) {}
    Fraction(R num, R den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw NotInvertible("fraction with zero denominator");
        reduce_fraction(num_, den_);
    }

    const R& num() const { return num_; }
    const R& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Fraction zero_like() const { return Fraction(num_.zero_like(), num_.one_like()); }
    Fraction one_like() const { return Fraction(num_.one_like(), num_.one_like()); }

    Fraction inverse() const {
        if (is_zero()) throw NotInvertible("inverse of zero fraction");
        return Fraction(den_, num_);
    }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator-(const Fraction& a) { return Fraction(-a.num_, a.den_); }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.is_zero()) throw NotInvertible("division by zero fraction");
        return Fraction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

  private:
    R num_, den_;
};

using LaurentFraction = Fraction<LaurentPoly>;

}  // namespace qtrace
