#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qtrace/fraction.hpp>
#include <qtrace/linalg.hpp>

using namespace qtrace;

namespace {

RootPtr root() {
    static RootPtr r = RootData::make(3);
    return r;
}

// one-variable Laurent monomial x^e
LaurentPoly X(long long e) {
    return LaurentPoly::monomial(root(), ExpVec{e}, Cyclotomic(root(), Rational(1)));
}

// two-variable Laurent monomial x^a y^b
LaurentPoly M(long long a, long long b) {
    return LaurentPoly::monomial(root(), ExpVec{a, b}, Cyclotomic(root(), Rational(1)));
}

}  // namespace

TEST_CASE("exact division in one variable") {
    LaurentPoly one = X(0);
    CHECK((X(2) - one) / (X(1) - one) == X(1) + one);
    CHECK((X(3) - one) / (X(1) - one) == X(2) + X(1) + one);
    // dividing an element by itself, including ones with negative exponents
    LaurentPoly p = X(1) - X(-1);
    CHECK(p / p == one);
    CHECK((p * p) / p == p);
    // division by a unit monomial shifts exponents
    CHECK((X(2) + X(1)) / X(1) == X(1) + one);
    CHECK((X(1) + one) / X(2) == X(-1) + X(-2));
    // zero divided by anything nonzero is zero
    CHECK((LaurentPoly::zero(root(), 1) / p).is_zero());
}

TEST_CASE("inexact division is detected") {
    LaurentPoly one = X(0);
    CHECK_THROWS_AS((X(2) + one) / (X(1) + one), InexactDivision);
    CHECK_THROWS_AS((X(1) + one) / (X(2) + one), InexactDivision);
    CHECK_THROWS_AS(one / LaurentPoly::zero(root(), 1), InexactDivision);
}

TEST_CASE("exact division in two variables") {
    // (x + 1)(y + 1) = xy + x + y + 1
    LaurentPoly p = M(1, 1) + M(1, 0) + M(0, 1) + M(0, 0);
    CHECK(p / (M(1, 0) + M(0, 0)) == M(0, 1) + M(0, 0));
    CHECK(p / (M(0, 1) + M(0, 0)) == M(1, 0) + M(0, 0));
    CHECK_THROWS_AS(p / (M(1, 0) + M(0, 1)), InexactDivision);
}

TEST_CASE("fractions normalize their denominators to unit content and zero shift") {
    LaurentPoly one = X(0);
    // 1 / 2: denominator content is absorbed into the numerator
    LaurentFraction half(one, one + one);
    CHECK(half.den() == one);
    CHECK(half.num() == LaurentPoly::constant(root(), 1, Cyclotomic(root(), Rational(1, 2))));
    // 1 / x: the monomial denominator is absorbed as a negative exponent
    LaurentFraction invx(one, X(1));
    CHECK(invx.den() == one);
    CHECK(invx.num() == X(-1));
    // (x + 1) / x^2
    LaurentFraction f(X(1) + one, X(2));
    CHECK(f.den() == one);
    CHECK(f.num() == X(-1) + X(-2));
    // a genuine fraction keeps its (shift-normalized) denominator
    LaurentFraction g(one, X(1) + one);
    CHECK(g.den() == X(1) + one);
}

TEST_CASE("fraction field laws") {
    LaurentPoly one = X(0);
    LaurentFraction g(one, X(1) + one);
    LaurentFraction h(X(1) - one, X(2) + X(1) + one);
    CHECK(g * g.inverse() == LaurentFraction(one));
    CHECK(g + (-g) == LaurentFraction(LaurentPoly::zero(root(), 1)));
    CHECK((g + h) - h == g);
    CHECK((g * h) / h == g);
    CHECK(g - g == h - h);
    // 1/(x+1) + 1/(x+1) = 2/(x+1)
    CHECK(g + g == LaurentFraction(one + one, X(1) + one));
}

TEST_CASE("zero denominators and zero inverses are rejected") {
    LaurentPoly zero = LaurentPoly::zero(root(), 1);
    CHECK_THROWS_AS(LaurentFraction(X(0), zero), NotInvertible);
    CHECK_THROWS_AS(LaurentFraction(zero).inverse(), NotInvertible);
    CHECK_THROWS_AS(LaurentFraction(X(1)) / LaurentFraction(zero), NotInvertible);
}

TEST_CASE("bareiss determinant over the laurent ring") {
    LaurentPoly zero = LaurentPoly::zero(root(), 1);
    Matrix<LaurentPoly> m(2, 2, zero);
    m.at(0, 0) = X(1);
    m.at(0, 1) = X(0);
    m.at(1, 0) = X(0);
    m.at(1, 1) = X(1);
    CHECK(bareiss_determinant(m) == X(2) - X(0));

    Matrix<LaurentPoly> s(2, 2, X(1) + X(0));
    CHECK(bareiss_determinant(s).is_zero());
}

TEST_CASE("bareiss agrees with cofactor expansion on a dense 3x3") {
    LaurentPoly zero = LaurentPoly::zero(root(), 1);
    Matrix<LaurentPoly> v(3, 3, zero);
    // v[i][j] = x^{i*j} + i + j (nontrivial exact-division steps)
    for (long long i = 0; i < 3; ++i)
        for (long long j = 0; j < 3; ++j)
            v.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                X(i * j) + LaurentPoly::constant(
                               root(), 1, Cyclotomic(root(), Rational(static_cast<long>(i + j))));
    auto det2 = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
        return v.at(r0, c0) * v.at(r1, c1) - v.at(r0, c1) * v.at(r1, c0);
    };
    LaurentPoly ref = v.at(0, 0) * det2(1, 2, 1, 2) - v.at(0, 1) * det2(1, 2, 0, 2) +
                      v.at(0, 2) * det2(1, 2, 0, 1);
    CHECK(bareiss_determinant(v) == ref);
}

TEST_CASE("bareiss determinant over cyclotomic scalars") {
    Cyclotomic z = zeta_power(root(), 1);
    Cyclotomic one = Cyclotomic(root(), Rational(1));
    Matrix<Cyclotomic> m(2, 2, Cyclotomic(root()));
    m.at(0, 0) = z;
    m.at(0, 1) = one;
    m.at(1, 0) = one;
    m.at(1, 1) = z;
    // z^2 - 1
    CHECK(bareiss_determinant(m) == zeta_power(root(), 2) - one);
}
