#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qtrace/qtorus.hpp>

#include <stdexcept>

using namespace qtrace;

namespace {

RootPtr root3() {
    static RootPtr r = RootData::make(3);
    return r;
}

SkewForm rank2_form() { return SkewForm({"x1", "x2"}, {{0, 1}, {-1, 0}}); }

TorusPtr rank2() {
    static TorusPtr alg = TorusAlgebra::make(root3(), rank2_form(), 0);
    return alg;
}

TorusPtr rank2_punctured() {
    static TorusPtr alg = TorusAlgebra::make(root3(), rank2_form(), 1);
    return alg;
}

}  // namespace

TEST_CASE("skew form validation") {
    CHECK_THROWS_AS(SkewForm({"x", "y"}, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SkewForm({"x", "y"}, {{0, 1}, {-1}}), std::invalid_argument);
    CHECK_THROWS_AS(SkewForm({"x", "y"}, {{1, 0}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SkewForm({"x", "y"}, {{0, 1}, {1, 0}}), std::invalid_argument);
    SkewForm ok = rank2_form();
    CHECK(ok.rank() == 2);
    CHECK(ok.entry(0, 1) == 1);
    CHECK(ok.entry(1, 0) == -1);
}

TEST_CASE("monomial products pick up the reordering phase") {
    auto alg = rank2();
    // x2 x1 = zeta^{-2} x1 x2, whereas x1 x2 is already ordered
    auto p = alg->mul_monomial(ExpVec{0, 1}, ExpVec{1, 0});
    CHECK(p.zeta_exponent == -2);
    CHECK(p.exponent == ExpVec{1, 1});
    auto q = alg->mul_monomial(ExpVec{1, 0}, ExpVec{0, 1});
    CHECK(q.zeta_exponent == 0);
    CHECK(q.exponent == ExpVec{1, 1});

    CHECK(alg->monomial(ExpVec{0, 1}) * alg->monomial(ExpVec{1, 0}) ==
          alg->monomial(ExpVec{1, 1}) * zeta_power(root3(), -2));
    // phases cancel against each other: x1 x2 * x2 x1 vs x1^2 x2^2
    CHECK(alg->monomial(ExpVec{1, 1}) * alg->monomial(ExpVec{1, 1}) ==
          alg->monomial(ExpVec{2, 2}) * zeta_power(root3(), -2));
}

TEST_CASE("weyl-ordered monomials") {
    auto alg = rank2();
    CHECK(alg->weyl_monomial(ExpVec{1, 1}) ==
          alg->monomial(ExpVec{1, 1}) * zeta_power(root3(), -1));
    CHECK(alg->weyl_monomial(ExpVec{1, 0}) == alg->monomial(ExpVec{1, 0}));
    // [x^u][x^v] = zeta^{u^T P v} [x^{u+v}] with u = (1,2), v = (3,1):
    // u^T P v = 1*1*1 + 2*(-1)*3 = -5
    TorusElement lhs = alg->weyl_monomial(ExpVec{1, 2}) * alg->weyl_monomial(ExpVec{3, 1});
    TorusElement rhs = alg->weyl_monomial(ExpVec{4, 3}) * zeta_power(root3(), -5);
    CHECK(lhs == rhs);
}

TEST_CASE("associativity and unit on sample elements") {
    auto alg = rank2_punctured();
    TorusElement a = alg->monomial(ExpVec{1, -2}) +
                     alg->basis_monomial(ChebIndex{1}, ExpVec{0, 1}) * zeta_power(root3(), 1);
    TorusElement b = alg->monomial(ExpVec{-1, 1}) * Cyclotomic(root3(), Rational(1, 2));
    TorusElement c = alg->basis_monomial(ChebIndex{2}, ExpVec{2, 0}) - alg->one();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * alg->one() == a);
    CHECK(alg->one() * a == a);
    CHECK((a - a).is_zero());
}

TEST_CASE("elements of different algebras do not mix") {
    auto alg = rank2();
    TorusPtr other = TorusAlgebra::make(root3(), SkewForm({"y"}, {{0}}), 0);
    CHECK_THROWS_AS(alg->one() + other->one(), IndexMismatch);
}

TEST_CASE("frobenius lift is central and multiplicative") {
    auto alg = rank2();
    TorusElement s = alg->monomial(ExpVec{1, 0}) + alg->monomial(ExpVec{0, 2});
    TorusElement t = alg->monomial(ExpVec{-1, 1}) + alg->one();
    CHECK(frobenius_lift(classical_mul(s, t)) == frobenius_lift(s) * frobenius_lift(t));
    // lifted elements commute with everything
    TorusElement l = frobenius_lift(s);
    TorusElement m = alg->monomial(ExpVec{1, 2});
    CHECK(l * m == m * l);
    // the lift of x1 is x1^3
    CHECK(frobenius_lift(alg->monomial(ExpVec{1, 0})) == alg->monomial(ExpVec{3, 0}));
}

TEST_CASE("trace onto the frobenius image keeps exactly the divisible part") {
    auto alg = rank2_punctured();
    CHECK(trace_over_frobenius(alg->monomial(ExpVec{3, 0})) == alg->monomial(ExpVec{3, 0}));
    CHECK(trace_over_frobenius(alg->monomial(ExpVec{3, -3})) == alg->monomial(ExpVec{3, -3}));
    CHECK(trace_over_frobenius(alg->monomial(ExpVec{1, 0})).is_zero());
    CHECK(trace_over_frobenius(alg->monomial(ExpVec{3, 2})).is_zero());
    // puncture coefficients filter by Chebyshev index divisibility
    CHECK(trace_over_frobenius(alg->basis_monomial(ChebIndex{1}, ExpVec{0, 0})).is_zero());
    CHECK(trace_over_frobenius(alg->basis_monomial(ChebIndex{3}, ExpVec{3, 3})) ==
          alg->basis_monomial(ChebIndex{3}, ExpVec{3, 3}));
    // mixed sums project term by term
    TorusElement t = alg->monomial(ExpVec{3, 0}) + alg->monomial(ExpVec{1, 1});
    CHECK(trace_over_frobenius(t) == alg->monomial(ExpVec{3, 0}));
    // projection is idempotent and a module map over the image
    TorusElement l = alg->monomial(ExpVec{3, 3});
    TorusElement u = alg->monomial(ExpVec{2, 1}) + alg->monomial(ExpVec{0, 3});
    CHECK(trace_over_frobenius(trace_over_frobenius(u)) == trace_over_frobenius(u));
    CHECK(trace_over_frobenius(l * u) == l * trace_over_frobenius(u));
}

TEST_CASE("trace symmetry on the quantum torus") {
    auto alg = rank2();
    for (long long u1 = -2; u1 <= 2; ++u1)
        for (long long u2 = -2; u2 <= 2; ++u2) {
            TorusElement x = alg->monomial(ExpVec{u1, u2});
            // products land on (3, 0), which the projection keeps, so the
            // comparison exercises the phases rather than 0 == 0
            TorusElement y = alg->monomial(ExpVec{3 - u1, -u2});
            CHECK(trace_over_frobenius(x * y) == trace_over_frobenius(y * x));
            CHECK(!trace_over_frobenius(x * y).is_zero());
        }
}

TEST_CASE("central lattice and the center projection") {
    auto alg = rank2();
    Lattice central = central_lattice(*alg);
    // P = [[0,1],[-1,0]] mod 3 has central lattice 3Z^2
    CHECK(central.index() == 9);
    CHECK(central.member({3, 0}));
    CHECK(central.member({0, -3}));
    CHECK(!central.member({1, 0}));

    CHECK(trace_over_center(alg->monomial(ExpVec{3, 3}), central) ==
          alg->monomial(ExpVec{3, 3}));
    CHECK(trace_over_center(alg->monomial(ExpVec{3, 1}), central).is_zero());
    // the center projection refines the frobenius projection here
    TorusElement u = alg->monomial(ExpVec{3, 1}) + alg->monomial(ExpVec{0, 3}) + alg->one();
    CHECK(trace_over_center(trace_over_frobenius(u), central) == trace_over_center(u, central));

    // a non-central lattice is rejected
    IntMat id(2, std::vector<Integer>(2, Integer(0)));
    id[0][0] = 1;
    id[1][1] = 1;
    CHECK_THROWS_AS(trace_over_center(u, Lattice::make(2, id)), LatticeNotCentral);
}

TEST_CASE("coset bases validate their representatives") {
    auto alg = rank2();
    Lattice central = central_lattice(*alg);
    CosetBasis basis = CosetBasis::make(alg, central);
    CHECK(basis.size() == 9);
    auto [idx, beta] = basis.locate(ExpVec{4, -2});
    CHECK(basis.rep(idx) == ExpVec{1, 1});
    CHECK(beta == ExpVec{3, -3});

    // duplicate representatives of one coset
    std::vector<ExpVec> dup;
    for (const auto& v : central.transversal()) dup.push_back(v);
    dup[1] = ExpVec{dup[0][0] + 3, dup[0][1]};
    CHECK_THROWS_AS(CosetBasis::make(alg, central, dup), BasisNotClosed);

    // too few representatives
    std::vector<ExpVec> few = {ExpVec{0, 0}, ExpVec{0, 1}};
    CHECK_THROWS_AS(CosetBasis::make(alg, central, few), BasisNotClosed);
}

TEST_CASE("residue decomposition round-trips") {
    auto alg = rank2_punctured();
    TorusElement t = alg->monomial(ExpVec{4, -5}) * zeta_power(root3(), 2) +
                     alg->basis_monomial(ChebIndex{2}, ExpVec{-1, 7}) +
                     alg->one() * Cyclotomic(root3(), Rational(5, 3));
    auto parts = residue_decompose(t);
    CHECK(!parts.empty());
    CHECK(reassemble(parts, alg) == t);
}

TEST_CASE("brute-force traces agree with the filters") {
    auto alg = rank2_punctured();
    TorusElement t = alg->monomial(ExpVec{3, 0}) + alg->monomial(ExpVec{2, 1}) +
                     alg->basis_monomial(ChebIndex{3}, ExpVec{0, 3}) +
                     alg->basis_monomial(ChebIndex{1}, ExpVec{1, 0}) * zeta_power(root3(), 1);
    CHECK(brute_force_trace_frobenius(t) == trace_over_frobenius(t));

    Lattice central = central_lattice(*alg);
    CosetBasis basis = CosetBasis::make(alg, central);
    CHECK(brute_force_trace_center(t, basis) == trace_over_center(t, central));
}

TEST_CASE("gram certificate for the rank-one frobenius pairing") {
    TorusPtr alg = TorusAlgebra::make(root3(), SkewForm({"x1"}, {{0}}), 0);
    GramCertificate cert = gram_certificate(alg, PairingKind::frobenius_image);
    CHECK(cert.x_basis_size == 3);
    CHECK(cert.symmetric);
    CHECK(cert.generalized_permutation);
    CHECK(cert.nondegenerate);
    // basis {1, x, x^2}: matching swaps x and x^2, fixing 1
    CHECK(cert.matching == std::vector<std::size_t>{0, 2, 1});
    CHECK(cert.permutation_sign == -1);
    CHECK(cert.monomial_determinant ==
          alg->monomial(ExpVec{6}) * Cyclotomic(root3(), Rational(-1)));
}

TEST_CASE("gram certificate for the rank-one center pairing") {
    TorusPtr alg = TorusAlgebra::make(root3(), SkewForm({"x1"}, {{0}}), 0);
    // the form is zero, so the whole exponent lattice is central: basis {1}
    GramCertificate cert = gram_certificate(alg, PairingKind::center);
    CHECK(cert.x_basis_size == 1);
    CHECK(cert.nondegenerate);
    CHECK(cert.permutation_sign == 1);
    CHECK(cert.monomial_determinant == alg->one());
}

TEST_CASE("gram certificate with puncture blocks") {
    TorusPtr alg = TorusAlgebra::make(root3(), SkewForm({"x1"}, {{0}}), 1);
    GramCertificate cert = gram_certificate(alg, PairingKind::frobenius_image);
    CHECK(cert.nondegenerate);
    CHECK(!cert.alpha_block_determinants.empty());
}

TEST_CASE("division witnesses verify themselves") {
    TorusPtr alg = TorusAlgebra::make(root3(), SkewForm({"x1"}, {{0}}), 0);
    TorusElement t = alg->one() + alg->monomial(ExpVec{1});
    DivisionWitness w = division_witness(t);
    CHECK(w.residues.size() == 3);
    CHECK(w.coords.size() == 3);
    CHECK_THROWS_AS(division_witness(alg->zero()), NotInvertible);

    auto alg2 = rank2();
    TorusElement u = alg2->monomial(ExpVec{1, 0}) + alg2->monomial(ExpVec{0, 1}) +
                     alg2->one() * zeta_power(root3(), 1);
    DivisionWitness w2 = division_witness(u);
    CHECK(w2.residues.size() == 9);
}
