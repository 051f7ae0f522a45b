#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qtrace/algebra.hpp>
#include <qtrace/cyclotomic.hpp>

using namespace qtrace;

namespace {

using Alg = FiniteDimAlgebra<Cyclotomic>;
using Sparse = Alg::Sparse;

RootPtr root3() {
    static RootPtr r = RootData::make(3);
    return r;
}

Cyclotomic cyc(long v) { return Cyclotomic(root3(), Rational(v)); }

// k[e] / (e^2): basis {1, e}
Alg dual_numbers() {
    std::vector<std::vector<Sparse>> table(2, std::vector<Sparse>(2));
    table[0][0] = {{0, cyc(1)}};
    table[0][1] = {{1, cyc(1)}};
    table[1][0] = {{1, cyc(1)}};
    table[1][1] = {};
    return Alg::make({"1", "e"}, table, {cyc(1), cyc(0)}, cyc(0));
}

// group algebra of Z/2: basis {1, g}, g^2 = 1
Alg z2_group_algebra() {
    std::vector<std::vector<Sparse>> table(2, std::vector<Sparse>(2));
    table[0][0] = {{0, cyc(1)}};
    table[0][1] = {{1, cyc(1)}};
    table[1][0] = {{1, cyc(1)}};
    table[1][1] = {{0, cyc(1)}};
    return Alg::make({"1", "g"}, table, {cyc(1), cyc(0)}, cyc(0));
}

}  // namespace

TEST_CASE("normalized trace of the unit is one") {
    Alg d = dual_numbers();
    CHECK(d.dim() == 2);
    CHECK(d.trace(d.unit()) == cyc(1));
    CHECK(d.trace(d.basis_vector(1)) == cyc(0));
}

TEST_CASE("dual numbers are degenerate, the group algebra is not") {
    FrobeniusCertificate<Cyclotomic> dual_cert = frobenius_certificate(dual_numbers());
    CHECK(dual_cert.symmetric);
    CHECK(dual_cert.determinant == cyc(0));
    CHECK(!dual_cert.nondegenerate);

    FrobeniusCertificate<Cyclotomic> z2_cert = frobenius_certificate(z2_group_algebra());
    CHECK(z2_cert.symmetric);
    CHECK(z2_cert.determinant == cyc(1));
    CHECK(z2_cert.nondegenerate);
    CHECK(z2_cert.gram.at(0, 0) == cyc(1));
    CHECK(z2_cert.gram.at(0, 1) == cyc(0));
    CHECK(z2_cert.gram.at(1, 1) == cyc(1));
}

TEST_CASE("multiplication uses the structure constants") {
    Alg g = z2_group_algebra();
    auto x = g.basis_vector(1);  // g
    auto prod = g.multiply(x, x);
    CHECK(prod[0] == cyc(1));
    CHECK(prod[1] == cyc(0));
    // (1 + g)^2 = 2 + 2g
    std::vector<Cyclotomic> y = {cyc(1), cyc(1)};
    auto sq = g.multiply(y, y);
    CHECK(sq[0] == cyc(2));
    CHECK(sq[1] == cyc(2));
}

TEST_CASE("tensor product multiplies dimensions and keeps the unit trace") {
    Alg t = tensor_product(dual_numbers(), z2_group_algebra());
    CHECK(t.dim() == 4);
    CHECK(t.trace(t.unit()) == cyc(1));
    CHECK(t.labels()[0] == "1(x)1");
    // e (x) g squares to 0 (x) 1 = 0
    std::vector<Cyclotomic> eg(4, cyc(0));
    eg[3] = cyc(1);  // basis pair (e, g)
    auto sq = t.multiply(eg, eg);
    for (const auto& c : sq) CHECK(c == cyc(0));
}

TEST_CASE("broken units are rejected") {
    std::vector<std::vector<Sparse>> table(2, std::vector<Sparse>(2));
    table[0][0] = {{0, cyc(1)}};
    table[0][1] = {{1, cyc(1)}};
    table[1][0] = {{1, cyc(1)}};
    table[1][1] = {};
    // claiming e as the unit fails the unit law
    CHECK_THROWS_AS(Alg::make({"1", "e"}, table, {cyc(0), cyc(1)}, cyc(0)), AlgebraInvalid);
}

TEST_CASE("nonassociative tables are rejected") {
    // basis {e, u, v} with unit e; u*u = v, u*v = e, v*u = v*v = 0:
    // (u*u)*u = v*u = 0 but u*(u*u) = u*v = e
    std::vector<std::vector<Sparse>> table(3, std::vector<Sparse>(3));
    table[0][0] = {{0, cyc(1)}};
    table[0][1] = {{1, cyc(1)}};
    table[0][2] = {{2, cyc(1)}};
    table[1][0] = {{1, cyc(1)}};
    table[2][0] = {{2, cyc(1)}};
    table[1][1] = {{2, cyc(1)}};
    table[1][2] = {{0, cyc(1)}};
    table[2][1] = {};
    table[2][2] = {};
    CHECK_THROWS_AS(Alg::make({"e", "u", "v"}, table, {cyc(1), cyc(0), cyc(0)}, cyc(0)),
                    AlgebraInvalid);
}

TEST_CASE("table shape is validated") {
    std::vector<std::vector<Sparse>> table(1, std::vector<Sparse>(2));
    CHECK_THROWS_AS(Alg::make({"1", "e"}, table, {cyc(1), cyc(0)}, cyc(0)), AlgebraInvalid);
    CHECK_THROWS_AS(Alg::make({}, {}, {}, cyc(0)), AlgebraInvalid);
}
