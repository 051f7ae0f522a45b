#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qtrace/cyclotomic.hpp>

#include <stdexcept>

using namespace qtrace;

TEST_CASE("root data accepts only odd orders at least three") {
    CHECK_THROWS_AS(RootData::make(1), std::invalid_argument);
    CHECK_THROWS_AS(RootData::make(2), std::invalid_argument);
    CHECK_THROWS_AS(RootData::make(4), std::invalid_argument);
    CHECK_THROWS_AS(RootData::make(6), std::invalid_argument);
    CHECK(RootData::make(3)->order() == 3);
    CHECK(RootData::make(3)->degree() == 2);
    CHECK(RootData::make(5)->degree() == 4);
    CHECK(RootData::make(9)->degree() == 6);
    CHECK(RootData::make(15)->degree() == 8);
}

TEST_CASE("zeta powers are periodic and satisfy the minimal relation") {
    auto root = RootData::make(3);
    Cyclotomic one(root, Rational(1));
    CHECK(zeta_power(root, 0) == one);
    CHECK(zeta_power(root, 3) == one);
    CHECK(zeta_power(root, 300) == one);
    CHECK(zeta_power(root, -1) == zeta_power(root, 2));
    CHECK(zeta_power(root, -7) == zeta_power(root, 2));
    // 1 + z + z^2 = 0 at order three
    CHECK((zeta_power(root, 0) + zeta_power(root, 1) + zeta_power(root, 2)).is_zero());
    // reduced coordinates: z^2 = -1 - z
    CHECK(zeta_power(root, 2).to_string() == "-1 + -1*z");
}

TEST_CASE("q is the square of zeta") {
    auto root = RootData::make(5);
    CHECK(q_power(root, 1) == zeta_power(root, 2));
    CHECK(q_power(root, 2) == zeta_power(root, 4));
    CHECK(q_power(root, -1) == zeta_power(root, 3));
    // q has the same multiplicative order: q^5 = 1
    CHECK(q_power(root, 5) == Cyclotomic(root, Rational(1)));
}

TEST_CASE("field arithmetic at order five") {
    auto root = RootData::make(5);
    Cyclotomic one(root, Rational(1));
    Cyclotomic s = zeta_power(root, 1) + zeta_power(root, 4);
    // s = z + z^4 satisfies s^2 + s - 1 = 0
    CHECK((s * s + s - one).is_zero());
    CHECK(s * s.inverse() == one);
    CHECK(s / s == one);
    // all five powers sum to zero
    Cyclotomic acc(root);
    for (long long m = 0; m < 5; ++m) acc = acc + zeta_power(root, m);
    CHECK(acc.is_zero());
}

TEST_CASE("rationality predicates") {
    auto root = RootData::make(3);
    Cyclotomic two(root, Rational(2));
    CHECK(two.is_rational());
    CHECK(two.rational_value() == Rational(2));
    CHECK(!two.is_one());
    CHECK(Cyclotomic(root, Rational(1)).is_one());
    CHECK(!zeta_power(root, 1).is_rational());
    CHECK_THROWS_AS(zeta_power(root, 1).rational_value(), std::domain_error);
    // z * z^2 = z^3 = 1 is rational even though the factors are not
    CHECK((zeta_power(root, 1) * zeta_power(root, 2)).is_rational());
}

TEST_CASE("inverse of zero and mixed roots are rejected") {
    auto r3 = RootData::make(3);
    auto r5 = RootData::make(5);
    CHECK_THROWS_AS(Cyclotomic(r3).inverse(), std::domain_error);
    CHECK_THROWS_AS(zeta_power(r3, 1) + zeta_power(r5, 1), FieldMismatch);
    CHECK_THROWS_AS(zeta_power(r3, 1) * zeta_power(r5, 1), FieldMismatch);
    CHECK_THROWS_AS(Cyclotomic() + zeta_power(r3, 1), FieldMismatch);
}

TEST_CASE("vector constructor reduces high zeta powers") {
    auto root = RootData::make(3);
    // 1 + z + z^2 + z^3 = (1 + z + z^2) + 1 = 1
    Cyclotomic v(root, std::vector<Rational>{Rational(1), Rational(1), Rational(1), Rational(1)});
    CHECK(v == Cyclotomic(root, Rational(1)));
    // z^4 = z
    Cyclotomic w(root, std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)});
    CHECK(w == zeta_power(root, 1));
}

TEST_CASE("inverse agrees with the explicit conjugate at order three") {
    auto root = RootData::make(3);
    // (z)^{-1} = z^2
    CHECK(zeta_power(root, 1).inverse() == zeta_power(root, 2));
    // (1 - z)^{-1}: (1 - z)(1 - z^2) = 1 - z - z^2 + z^3 = 2 - (z + z^2) = 3
    Cyclotomic d = Cyclotomic(root, Rational(1)) - zeta_power(root, 1);
    Cyclotomic expect = (Cyclotomic(root, Rational(1)) - zeta_power(root, 2)) * Rational(1, 3);
    CHECK(d.inverse() == expect);
}
