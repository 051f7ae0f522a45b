#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qtrace/chebyshev.hpp>

using namespace qtrace;

TEST_CASE("normalized chebyshev polynomials, frozen coefficients") {
    CHECK(chebyshev_t(0) == RatPoly(Rational(2)));
    CHECK(chebyshev_t(1) == RatPoly::monomial(1));
    CHECK(chebyshev_t(2) == RatPoly::monomial(2) - RatPoly(Rational(2)));
    CHECK(chebyshev_t(3) == RatPoly::monomial(3) - RatPoly::monomial(1, Rational(3)));
    CHECK(chebyshev_t(4) ==
          RatPoly::monomial(4) - RatPoly::monomial(2, Rational(4)) + RatPoly(Rational(2)));
    CHECK(chebyshev_t(5) == RatPoly::monomial(5) - RatPoly::monomial(3, Rational(5)) +
                                RatPoly::monomial(1, Rational(5)));
    CHECK(chebyshev_t(12).degree() == 12);
}

TEST_CASE("product rule T_a T_b = T_{a+b} + T_{|a-b|}") {
    for (unsigned a = 0; a <= 8; ++a)
        for (unsigned b = 0; b <= 8; ++b) {
            unsigned diff = a > b ? a - b : b - a;
            CHECK(chebyshev_t(a) * chebyshev_t(b) == chebyshev_t(a + b) + chebyshev_t(diff));
        }
}

TEST_CASE("series product mirrors the polynomial product") {
    ChebSeries a{{2, Rational(1)}, {5, Rational(-3)}};
    ChebSeries b{{0, Rational(1, 2)}, {3, Rational(1)}};
    RatPoly pa = cheb_series_to_poly(a);
    RatPoly pb = cheb_series_to_poly(b);
    CHECK(cheb_series_to_poly(cheb_mul(a, b)) == pa * pb);
}

TEST_CASE("expansion round-trips and is supported on single indices for T_k") {
    RatPoly f = RatPoly::monomial(7, Rational(3, 2)) - RatPoly::monomial(4) +
                RatPoly::monomial(1, Rational(-5)) + RatPoly(Rational(7));
    CHECK(cheb_series_to_poly(chebyshev_expand(f)) == f);
    ChebSeries d = chebyshev_expand(chebyshev_t(6));
    CHECK(d.size() == 1);
    CHECK(d.at(6) == Rational(1));
    CHECK(chebyshev_expand(RatPoly()).empty());
}

TEST_CASE("index filter keeps exactly the indices divisible by the modulus") {
    RatPoly f = chebyshev_t(6) + chebyshev_t(4) + chebyshev_t(3) + chebyshev_t(1) + chebyshev_t(0);
    CHECK(chebyshev_trace_filter(f, 3) == chebyshev_t(6) + chebyshev_t(3) + chebyshev_t(0));
    CHECK(chebyshev_trace_filter(chebyshev_t(4), 3).is_zero());
    CHECK(chebyshev_trace_filter(chebyshev_t(10), 5) == chebyshev_t(10));
    CHECK(chebyshev_trace_filter(chebyshev_t(0), 7) == chebyshev_t(0));
    // idempotence
    CHECK(chebyshev_trace_filter(chebyshev_trace_filter(f, 3), 3) ==
          chebyshev_trace_filter(f, 3));
}

TEST_CASE("index split: T_m = sum_r f_r T_r with f_r supported on multiples of N") {
    for (unsigned n : {3u, 5u})
        for (unsigned m = 0; m <= 3 * n + 2; ++m) {
            const auto& split = frobenius_split(m, n);
            ChebSeries sum;
            for (const auto& [r, fr] : split) {
                CHECK(r < n);
                for (const auto& [idx, c] : fr) {
                    CHECK(idx % n == 0);
                    (void)c;
                }
                ChebSeries tr{{r, Rational(1)}};
                for (const auto& [idx, c] : cheb_mul(fr, tr)) cheb_add_term(sum, idx, c);
            }
            ChebSeries expect{{m, Rational(1)}};
            CHECK(sum == expect);
        }
}

TEST_CASE("index split frozen small cases at N = 3") {
    // T_1 = (1/2) T_0 * T_1 in residue 1
    {
        const auto& s = frobenius_split(1, 3);
        CHECK(s.size() == 1);
        CHECK(s.at(1) == ChebSeries{{0, Rational(1, 2)}});
    }
    // T_3 sits over residue 0 with coefficient (1/2) T_3
    {
        const auto& s = frobenius_split(3, 3);
        CHECK(s.size() == 1);
        CHECK(s.at(0) == ChebSeries{{3, Rational(1, 2)}});
    }
    // T_4 = T_3 T_1 - T_2, so the parts sit on residues {1, 2}:
    // f_1 = T_3 and f_2 = -(1/2) T_0
    {
        const auto& s = frobenius_split(4, 3);
        CHECK(s.size() == 2);
        CHECK(s.at(1) == ChebSeries{{3, Rational(1)}});
        CHECK(s.at(2) == ChebSeries{{0, Rational(-1, 2)}});
    }
}
