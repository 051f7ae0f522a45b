#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qtrace/oq.hpp>

#include <stdexcept>

using namespace qtrace;

namespace {

RootPtr root3() {
    static RootPtr r = RootData::make(3);
    return r;
}

OqPtr ctx3() {
    static OqPtr c = OqContext::make(root3());
    return c;
}

}  // namespace

TEST_CASE("defining relations in normal form") {
    auto ctx = ctx3();
    OqElement a = ctx->gen('a'), b = ctx->gen('b'), c = ctx->gen('c'), d = ctx->gen('d');
    CHECK(b * a == ctx->monomial(OqMono{1, 1, 0, 0}) * ctx->q(2));
    CHECK(c * a == ctx->monomial(OqMono{1, 0, 1, 0}) * ctx->q(2));
    CHECK(d * b == ctx->monomial(OqMono{0, 1, 0, 1}) * ctx->q(2));
    CHECK(d * c == ctx->monomial(OqMono{0, 0, 1, 1}) * ctx->q(2));
    CHECK(b * c == c * b);
    CHECK(b * c == ctx->monomial(OqMono{0, 1, 1, 0}));
    CHECK(a * d == ctx->one() + ctx->monomial(OqMono{0, 1, 1, 0}) * ctx->q(-2));
    CHECK(d * a == ctx->one() + ctx->monomial(OqMono{0, 1, 1, 0}) * ctx->q(2));
    // ad - da = (q^{-2} - q^2) bc
    CHECK(a * d - d * a == (b * c) * (ctx->q(-2) - ctx->q(2)));
    // the quantum determinant ad - q^{-2} bc is 1
    CHECK(a * d - (b * c) * ctx->q(-2) == ctx->one());
}

TEST_CASE("words multiply out in the pbw order") {
    auto ctx = ctx3();
    OqElement w = normal_form(ctx, {{'b', 1}, {'a', 2}, {'c', 1}});
    // b a^2 c = q^4 a^2 b c
    CHECK(w == ctx->monomial(OqMono{2, 1, 1, 0}) * ctx->q(4));
    OqElement v = normal_form(ctx, {{'d', 2}, {'b', 1}});
    // d^2 b = q^4 b d^2
    CHECK(v == ctx->monomial(OqMono{0, 1, 0, 2}) * ctx->q(4));
    CHECK(normal_form(ctx, {}) == ctx->one());
    CHECK(oq_pow(ctx->gen('a'), 3) == ctx->monomial(OqMono{3, 0, 0, 0}));
}

TEST_CASE("monomials never mix the two diagonal generators") {
    auto ctx = ctx3();
    CHECK_THROWS_AS(ctx->monomial(OqMono{1, 0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ctx->monomial(OqMono{-1, 0, 0, 0}), std::invalid_argument);
    // multiplying a by d resolves through the determinant relation instead
    OqElement ad = ctx->gen('a') * ctx->gen('d');
    for (const auto& [m, coef] : ad.terms()) {
        CHECK((m.a == 0 || m.d == 0));
        (void)coef;
    }
}

TEST_CASE("frobenius powers are a central commuting family") {
    FrobeniusHomReport r3 = verify_frobenius_hom(ctx3());
    CHECK(r3.pairwise_commute);
    CHECK(r3.determinant_identity);
    CHECK(r3.central);
    CHECK(r3.ok());
    FrobeniusHomReport r5 = verify_frobenius_hom(OqContext::make(RootData::make(5)));
    CHECK(r5.ok());
}

TEST_CASE("center generators") {
    auto ctx = ctx3();
    CHECK(center_generator(ctx, 0) == ctx->one());
    CHECK(center_generator(ctx, 1) == ctx->monomial(OqMono{0, 1, 2, 0}));
    CHECK(center_generator(ctx, 2) == ctx->monomial(OqMono{0, 2, 1, 0}));
    CHECK_THROWS_AS(center_generator(ctx, 3), std::invalid_argument);
    CenterGeneratorReport rep = center_generator_check(ctx);
    CHECK(rep.commute);
    CHECK(rep.independent);
}

TEST_CASE("eliminating a lands in the ordered torus") {
    auto ctx = ctx3();
    TorusPtr t = dbc_torus(root3());
    CHECK(t->rank() == 3);
    CHECK(eliminate_a(ctx->gen('d'), t) == t->monomial(ExpVec{1, 0, 0}));
    CHECK(eliminate_a(ctx->gen('b'), t) == t->monomial(ExpVec{0, 1, 0}));
    CHECK(eliminate_a(ctx->gen('c'), t) == t->monomial(ExpVec{0, 0, 1}));
    // a maps to d^{-1} + q^2 d^{-1} b c
    CHECK(eliminate_a(ctx->gen('a'), t) ==
          t->monomial(ExpVec{-1, 0, 0}) + t->monomial(ExpVec{-1, 1, 1}) * q_power(root3(), 2));
    // the image of ad equals the image of 1 + q^{-2} bc
    CHECK(eliminate_a(ctx->gen('a') * ctx->gen('d'), t) ==
          t->one() + t->monomial(ExpVec{0, 1, 1}) * q_power(root3(), -2));
}

TEST_CASE("elimination is multiplicative") {
    auto ctx = ctx3();
    TorusPtr t = dbc_torus(root3());
    OqElement x = ctx->gen('a') + ctx->gen('b') * ctx->q(1);
    OqElement y = ctx->gen('c') * ctx->gen('d') - ctx->one();
    CHECK(eliminate_a(x * y, t) == eliminate_a(x, t) * eliminate_a(y, t));
    OqElement z = ctx->gen('a') * ctx->gen('a') + ctx->gen('d');
    CHECK(eliminate_a(x * z, t) == eliminate_a(x, t) * eliminate_a(z, t));
}

TEST_CASE("traces of normal monomials, frozen values") {
    auto ctx = ctx3();
    TorusPtr t = dbc_torus(root3());
    // d^3 is already in the image: Tr(d^3) = d^3
    CHECK(trace_over_frobenius_fraction(oq_pow(ctx->gen('d'), 3), t) ==
          t->monomial(ExpVec{3, 0, 0}));
    // db is killed
    CHECK(trace_over_frobenius_fraction(ctx->gen('d') * ctx->gen('b'), t).is_zero());
    // b^3 c^3 survives
    OqElement b3c3 = normal_form(ctx, {{'b', 3}, {'c', 3}});
    CHECK(trace_over_frobenius_fraction(b3c3, t) == t->monomial(ExpVec{0, 3, 3}));
    // Tr(a d b^2 c^2) = q^{-2} b^3 c^3
    OqElement w = normal_form(ctx, {{'a', 1}, {'d', 1}, {'b', 2}, {'c', 2}});
    CHECK(trace_over_frobenius_fraction(w, t) ==
          t->monomial(ExpVec{0, 3, 3}) * q_power(root3(), -2));
}

TEST_CASE("trace over the center filters by the central lattice") {
    auto ctx = ctx3();
    TorusPtr t = dbc_torus(root3());
    CHECK(central_lattice(*t).index() == 9);
    // d^3 is central, b^3 alone is too (exponent (0,3,0)), but d b is not
    CHECK(trace_over_center_fraction(oq_pow(ctx->gen('d'), 3), t) ==
          t->monomial(ExpVec{3, 0, 0}));
    CHECK(trace_over_center_fraction(oq_pow(ctx->gen('b'), 3), t) ==
          t->monomial(ExpVec{0, 3, 0}));
    CHECK(trace_over_center_fraction(ctx->gen('b') * ctx->gen('c'), t).is_zero());
    // x_1 = b c^2 eliminates to a central exponent and is kept whole
    CHECK(trace_over_center_fraction(center_generator(ctx, 1), t) ==
          t->monomial(ExpVec{0, 1, 2}));
}

TEST_CASE("points of the special linear group") {
    Cyclotomic one(root3(), Rational(1));
    Cyclotomic zero(root3());
    CHECK_THROWS_AS(SLPoint(one, one, one, one), std::invalid_argument);
    SLPoint w(zero, one, -one, zero);
    CHECK(w.inside_w());
    SLPoint id(one, zero, zero, one);
    CHECK(!id.inside_w());
}

TEST_CASE("specialization at the identity closes on the cube basis") {
    auto ctx = ctx3();
    Cyclotomic one(root3(), Rational(1));
    Cyclotomic zero(root3());
    Specialization s = specialize(ctx, SLPoint(one, zero, zero, one));
    CHECK(s.algebra.dim() == 27);
    CHECK(s.a_basis);
    CHECK(s.algebra.trace(s.algebra.unit()) == one);
    // the identity sits on the degenerate locus of the pairing
    CHECK(!frobenius_certificate(s.algebra).nondegenerate);
}

TEST_CASE("specialization at a dense point is frobenius") {
    auto ctx = ctx3();
    Cyclotomic one(root3(), Rational(1));
    Cyclotomic two(root3(), Rational(2));
    Specialization s = specialize(ctx, SLPoint(one, one, one, two));
    CHECK(s.algebra.dim() == 27);
    FrobeniusCertificate<Cyclotomic> cert = frobenius_certificate(s.algebra);
    CHECK(cert.symmetric);
    CHECK(cert.nondegenerate);
}

TEST_CASE("points with both diagonals zero need the exploratory flag") {
    auto ctx = ctx3();
    Cyclotomic one(root3(), Rational(1));
    Cyclotomic zero(root3());
    SLPoint w(zero, one, -one, zero);
    CHECK_THROWS_AS(specialize(ctx, w), InsideW);
    Specialization s = specialize(ctx, w, true);
    CHECK(s.algebra.dim() == 27);
    CHECK(!s.a_basis);
}
