#pragma once

// Verification suites shared by the command-line tool and the acceptance
// harness. Each check function returns a CheckRecord; suite runners bundle
// them with deterministic seeding. Hard checks verify proved statements;
// exploratory checks report on open comparisons and never fail a run.

#include <qtrace/algebra.hpp>
#include <qtrace/chebyshev.hpp>
#include <qtrace/expr.hpp>
#include <qtrace/io.hpp>
#include <qtrace/oq.hpp>
#include <qtrace/qtorus.hpp>
#include <qtrace/report.hpp>
#include <qtrace/surface.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qtrace {

struct SuiteConfig {
    unsigned n = 3;
    std::uint64_t seed = 20240613;
    bool exploratory = false;
    std::string fixture_dir = "fixtures";
};

namespace detail {

inline long long pick(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline std::string suffix(unsigned n) { return ".n" + std::to_string(n); }

// Random basis monomial zeta^e * prod_p T_{a_p}(alpha_p) * x^k.
inline TorusElement random_monomial(const TorusPtr& alg, std::mt19937_64& rng, long long max_exp,
                                    long long max_cheb) {
    ExpVec k(alg->rank());
    for (auto& v : k) v = pick(rng, -max_exp, max_exp);
    ChebIndex a(alg->punctures(), 0);
    for (auto& v : a) v = static_cast<std::uint32_t>(pick(rng, 0, max_cheb));
    return alg->basis_monomial(a, std::move(k)) *
           zeta_power(alg->root(), pick(rng, 0, alg->order() - 1));
}

inline TorusElement random_sparse(const TorusPtr& alg, std::mt19937_64& rng, long long max_exp,
                                  long long max_cheb) {
    TorusElement t = alg->zero();
    const long long terms = pick(rng, 1, 4);
    for (long long i = 0; i < terms; ++i)
        t = t + random_monomial(alg, rng, max_exp, max_cheb) *
                    Cyclotomic(alg->root(), Rational(static_cast<long>(pick(rng, -3, 3))));
    return t;
}

inline SkewForm random_form(std::size_t rank, std::mt19937_64& rng, long long max_entry) {
    std::vector<std::vector<long long>> p(rank, std::vector<long long>(rank, 0));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < rank; ++i) {
        names.push_back("x" + std::to_string(i + 1));
        for (std::size_t j = i + 1; j < rank; ++j) {
            p[i][j] = pick(rng, -max_entry, max_entry);
            p[j][i] = -p[i][j];
        }
    }
    return SkewForm(std::move(names), std::move(p));
}

inline SkewForm builtin_form_rank1() { return SkewForm({"x1"}, {{0}}); }
inline SkewForm builtin_form_rank2() { return SkewForm({"x1", "x2"}, {{0, 1}, {-1, 0}}); }
inline SkewForm builtin_form_rank3() {
    return SkewForm({"x1", "x2", "x3"}, {{0, 2, 2}, {-2, 0, 0}, {-2, 0, 0}});
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Chebyshev module trace (scalar level).

// Normalized trace of multiplication by T_k on the free module with basis
// {T_0, ..., T_{N-1}} over the subring generated by T_N, straight from the
// defining construction: average the diagonal of the multiplication matrix.
inline ChebSeries cheb_module_trace(unsigned k, unsigned n) {
    ChebSeries acc;
    for (unsigned t = 0; t < n; ++t) {
        const unsigned prods[2] = {k + t, k >= t ? k - t : t - k};
        for (unsigned m : prods) {
            const auto& split = frobenius_split(m, n);
            auto it = split.find(t);
            if (it == split.end()) continue;
            for (const auto& [idx, c] : it->second)
                cheb_add_term(acc, idx, c / Rational(static_cast<long>(n)));
        }
    }
    return acc;
}

inline CheckRecord check_chebyshev_trace(unsigned n) {
    return run_check(
        "scalars.chebyshev_trace" + detail::suffix(n),
        "the index filter on T_k equals T_k when N | k and 0 otherwise, and matches the "
        "brute-force module trace over the T_N subring for k = 0..4N",
        false, [n](CheckRecord& rec) {
            unsigned cases = 0;
            for (unsigned k = 0; k <= 4 * n; ++k) {
                const RatPoly tk = chebyshev_t(k);
                const RatPoly filtered = chebyshev_trace_filter(tk, n);
                const RatPoly expected = (k % n == 0) ? tk : RatPoly();
                const RatPoly oracle = cheb_series_to_poly(cheb_module_trace(k, n));
                if (!(filtered == expected) || !(filtered == oracle)) {
                    rec.witness = Json{{"k", k}, {"failure", "filter, closed form, and module "
                                                            "trace disagree"}};
                    rec.passed = false;
                    return;
                }
                ++cases;
            }
            rec.passed = true;
            rec.witness = Json{{"cases", cases}};
        });
}

// ---------------------------------------------------------------------------
// Bigon checks.

inline CheckRecord check_bigon_frobenius_hom(unsigned n) {
    return run_check(
        "bigon.frobenius_hom" + detail::suffix(n),
        "the N-th powers of a, b, c, d pairwise commute, are central, and satisfy "
        "a^N d^N - b^N c^N = 1 in normal form",
        false, [n](CheckRecord& rec) {
            auto ctx = OqContext::make(RootData::make(n));
            FrobeniusHomReport r = verify_frobenius_hom(ctx);
            rec.passed = r.ok();
            rec.witness = Json{{"pairwise_commute", r.pairwise_commute},
                               {"determinant_identity", r.determinant_identity},
                               {"central", r.central}};
        });
}

inline CheckRecord check_bigon_center_generators(unsigned n) {
    return run_check(
        "bigon.center_generators" + detail::suffix(n),
        "the elements 1 and b^i c^{N-i} commute with all four generators and lie in "
        "distinct residue classes",
        false, [n](CheckRecord& rec) {
            auto ctx = OqContext::make(RootData::make(n));
            CenterGeneratorReport r = center_generator_check(ctx);
            rec.passed = r.ok();
            rec.witness = Json{{"commute", r.commute}, {"independent", r.independent}};
        });
}

inline CheckRecord check_bigon_trace_frobenius_table(unsigned n) {
    return run_check(
        "bigon.trace_frobenius.table" + detail::suffix(n),
        "Tr(d^{k1} b^{k2} c^{k3}) over the N-th power subalgebra equals the monomial itself "
        "when N divides every k_i and 0 otherwise, for 0 <= k_i <= 2N",
        false, [n](CheckRecord& rec) {
            auto ctx = OqContext::make(RootData::make(n));
            auto torus = dbc_torus(ctx->root());
            unsigned cases = 0;
            for (long long k1 = 0; k1 <= 2 * n; ++k1)
                for (long long k2 = 0; k2 <= 2 * n; ++k2)
                    for (long long k3 = 0; k3 <= 2 * n; ++k3) {
                        OqElement x = normal_form(ctx, {{'d', k1}, {'b', k2}, {'c', k3}});
                        TorusElement tr = trace_over_frobenius_fraction(x, torus);
                        const bool keep = k1 % n == 0 && k2 % n == 0 && k3 % n == 0;
                        TorusElement expected =
                            keep ? eliminate_a(x, torus) : torus->zero();
                        if (!(tr == expected)) {
                            rec.passed = false;
                            rec.witness = Json{{"k", {k1, k2, k3}},
                                               {"trace", torus_element_to_json(tr)}};
                            return;
                        }
                        ++cases;
                    }
            rec.passed = true;
            rec.witness = Json{{"cases", cases}};
        });
}

inline CheckRecord check_bigon_trace_frobenius_remark(unsigned n) {
    return run_check(
        "bigon.trace_frobenius.remark" + detail::suffix(n),
        "Tr(a d b^{N-1} c^{N-1}) = q^{-2} b^N c^N even though N divides no exponent",
        false, [n](CheckRecord& rec) {
            auto ctx = OqContext::make(RootData::make(n));
            auto torus = dbc_torus(ctx->root());
            OqElement x = normal_form(
                ctx, {{'a', 1}, {'d', 1}, {'b', static_cast<long long>(n) - 1},
                      {'c', static_cast<long long>(n) - 1}});
            TorusElement tr = trace_over_frobenius_fraction(x, torus);
            TorusElement expected =
                torus->monomial(ExpVec{0, static_cast<long long>(n), static_cast<long long>(n)}) *
                q_power(torus->root(), -2);
            rec.passed = tr == expected;
            std::ostringstream w;
            w << "q^-2 b^" << n << " c^" << n;
            rec.witness = Json{{"element", "a d b^" + std::to_string(n - 1) + " c^" +
                                               std::to_string(n - 1)},
                               {"trace", w.str()},
                               {"terms", torus_element_to_json(tr)}};
        });
}

inline CheckRecord check_bigon_trace_center_table(unsigned n) {
    return run_check(
        "bigon.trace_center.table" + detail::suffix(n),
        "Tr(d^{k1} b^{k2}) over the center equals the monomial itself when N divides both "
        "exponents and 0 otherwise, for 0 <= k_i <= 2N",
        false, [n](CheckRecord& rec) {
            auto ctx = OqContext::make(RootData::make(n));
            auto torus = dbc_torus(ctx->root());
            unsigned cases = 0;
            for (long long k1 = 0; k1 <= 2 * n; ++k1)
                for (long long k2 = 0; k2 <= 2 * n; ++k2) {
                    OqElement x = normal_form(ctx, {{'d', k1}, {'b', k2}});
                    TorusElement tr = trace_over_center_fraction(x, torus);
                    const bool keep = k1 % n == 0 && k2 % n == 0;
                    TorusElement expected = keep ? eliminate_a(x, torus) : torus->zero();
                    if (!(tr == expected)) {
                        rec.passed = false;
                        rec.witness =
                            Json{{"k", {k1, k2}}, {"trace", torus_element_to_json(tr)}};
                        return;
                    }
                    ++cases;
                }
            rec.passed = true;
            rec.witness = Json{{"cases", cases}};
        });
}

inline CheckRecord check_bigon_trace_center_oracle(unsigned n, std::uint64_t seed) {
    return run_check(
        "bigon.trace_center.oracle" + detail::suffix(n),
        "the center projection trace agrees with the brute-force trace over the "
        "d^{k1} b^{k2} transversal basis on 50 random elements",
        false, [n, seed](CheckRecord& rec) {
            auto ctx = OqContext::make(RootData::make(n));
            auto torus = dbc_torus(ctx->root());
            Lattice center = central_lattice(*torus);
            std::vector<ExpVec> reps;
            for (long long k1 = 0; k1 < n; ++k1)
                for (long long k2 = 0; k2 < n; ++k2) reps.push_back(ExpVec{k1, k2, 0});
            CosetBasis basis = CosetBasis::make(torus, center, reps);
            std::mt19937_64 rng(seed);
            unsigned cases = 0;
            for (int it = 0; it < 50; ++it) {
                TorusElement t = torus->zero();
                if (it % 2 == 0) {
                    t = detail::random_sparse(torus, rng, 2 * n, 0);
                } else {
                    // a genuine coordinate-algebra element pushed through the
                    // fraction-field identification, letter a included
                    OqElement x = ctx->zero();
                    const long long terms = detail::pick(rng, 1, 3);
                    for (long long j = 0; j < terms; ++j) {
                        bool use_a = detail::pick(rng, 0, 1) == 1;
                        OqMono m;
                        m.a = use_a ? detail::pick(rng, 0, n) : 0;
                        m.b = detail::pick(rng, 0, 2 * n);
                        m.c = detail::pick(rng, 0, 2 * n);
                        m.d = use_a ? 0 : detail::pick(rng, 0, n);
                        x = x + ctx->monomial(m) *
                                    zeta_power(ctx->root(), detail::pick(rng, 0, n - 1));
                    }
                    t = eliminate_a(x, torus);
                }
                if (!(trace_over_center(t, center) == brute_force_trace_center(t, basis))) {
                    rec.passed = false;
                    rec.witness = Json{{"iteration", it}, {"element", torus_element_to_json(t)}};
                    return;
                }
                ++cases;
            }
            rec.passed = true;
            rec.witness = Json{{"cases", cases}, {"basis_size", basis.size()}};
        });
}

// ---------------------------------------------------------------------------
// Torus checks.

inline CheckRecord check_torus_product_laws(unsigned n, std::uint64_t seed) {
    return run_check(
        "torus.product_laws" + detail::suffix(n),
        "multiplication is associative and unital on random elements and reproduces the "
        "commutation rule x^u x^v = zeta^{2 u^T P v} x^v x^u",
        false, [n, seed](CheckRecord& rec) {
            auto root = RootData::make(n);
            std::mt19937_64 rng(seed);
            unsigned cases = 0;
            for (const SkewForm& form :
                 {detail::builtin_form_rank2(), detail::builtin_form_rank3(),
                  detail::random_form(4, rng, 3)}) {
                auto alg = TorusAlgebra::make(root, form, 1);
                for (int it = 0; it < 40; ++it) {
                    TorusElement x = detail::random_monomial(alg, rng, 2 * n, 2 * n);
                    TorusElement y = detail::random_monomial(alg, rng, 2 * n, 2 * n);
                    TorusElement z = detail::random_sparse(alg, rng, n, n);
                    if (!((x * y) * z == x * (y * z))) {
                        rec.passed = false;
                        rec.witness = Json{{"failure", "associativity"}, {"iteration", it}};
                        return;
                    }
                    if (!(x * alg->one() == x) || !(alg->one() * x == x)) {
                        rec.passed = false;
                        rec.witness = Json{{"failure", "unit law"}, {"iteration", it}};
                        return;
                    }
                    ++cases;
                }
                // commutation rule on random exponent pairs
                for (int it = 0; it < 40; ++it) {
                    ExpVec u(alg->rank()), v(alg->rank());
                    for (auto& e : u) e = detail::pick(rng, -2LL * n, 2LL * n);
                    for (auto& e : v) e = detail::pick(rng, -2LL * n, 2LL * n);
                    long long utpv = 0;
                    for (std::size_t i = 0; i < alg->rank(); ++i)
                        for (std::size_t j = 0; j < alg->rank(); ++j)
                            utpv += u[i] * form.entry(i, j) * v[j];
                    TorusElement lhs = alg->monomial(u) * alg->monomial(v);
                    TorusElement rhs = alg->monomial(v) * alg->monomial(u) *
                                       zeta_power(root, 2 * utpv);
                    if (!(lhs == rhs)) {
                        rec.passed = false;
                        rec.witness = Json{{"failure", "commutation rule"}, {"u", u}, {"v", v}};
                        return;
                    }
                    ++cases;
                }
            }
            rec.passed = true;
            rec.witness = Json{{"cases", cases}};
        });
}

inline CheckRecord check_torus_weyl(unsigned n, std::uint64_t seed) {
    return run_check(
        "torus.weyl" + detail::suffix(n),
        "Weyl-ordered monomials are independent of factor order and satisfy "
        "[x^u][x^v] = zeta^{u^T P v} [x^{u+v}]",
        false, [n, seed](CheckRecord& rec) {
            auto root = RootData::make(n);
            std::mt19937_64 rng(seed + 1);
            auto alg = TorusAlgebra::make(root, detail::builtin_form_rank3(), 0);
            unsigned cases = 0;
            for (int it = 0; it < 30; ++it) {
                // a random generator multiset of size <= 6, evaluated in two orders
                std::vector<std::size_t> seq;
                const long long len = detail::pick(rng, 1, 6);
                for (long long i = 0; i < len; ++i)
                    seq.push_back(static_cast<std::size_t>(detail::pick(rng, 0, 2)));
                std::vector<std::size_t> shuffled = seq;
                for (std::size_t i = shuffled.size(); i > 1; --i)
                    std::swap(shuffled[i - 1],
                              shuffled[static_cast<std::size_t>(detail::pick(rng, 0, i - 1))]);
                if (!(alg->weyl_word(seq) == alg->weyl_word(shuffled))) {
                    rec.passed = false;
                    rec.witness = Json{{"failure", "order dependence"}, {"sequence", seq}};
                    return;
                }
                // the Weyl product rule
                ExpVec u(3), v(3);
                for (auto& e : u) e = detail::pick(rng, -2LL * n, 2LL * n);
                for (auto& e : v) e = detail::pick(rng, -2LL * n, 2LL * n);
                long long utpv = 0;
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j)
                        utpv += u[i] * alg->form().entry(i, j) * v[j];
                ExpVec w(3);
                for (std::size_t i = 0; i < 3; ++i) w[i] = u[i] + v[i];
                if (!(alg->weyl_monomial(u) * alg->weyl_monomial(v) ==
                      alg->weyl_monomial(w) * zeta_power(root, utpv))) {
                    rec.passed = false;
                    rec.witness = Json{{"failure", "weyl product"}, {"u", u}, {"v", v}};
                    return;
                }
                ++cases;
            }
            rec.passed = true;
            rec.witness = Json{{"cases", cases}};
        });
}

inline CheckRecord check_torus_frobenius_lift(unsigned n, std::uint64_t seed) {
    return run_check(
        "torus.frobenius_lift" + detail::suffix(n),
        "the Frobenius lift x^k -> x^{Nk}, alpha_p -> T_N(alpha_p) is an injective ring "
        "homomorphism from the classical torus and its image is central",
        false, [n, seed](CheckRecord& rec) {
            auto root = RootData::make(n);
            std::mt19937_64 rng(seed + 2);
            auto alg = TorusAlgebra::make(root, detail::builtin_form_rank2(), 1);
            unsigned cases = 0;
            for (int it = 0; it < 50; ++it) {
                TorusElement u = detail::random_sparse(alg, rng, n, n);
                TorusElement v = detail::random_sparse(alg, rng, n, n);
                if (!(frobenius_lift(classical_mul(u, v)) ==
                      frobenius_lift(u) * frobenius_lift(v))) {
                    rec.passed = false;
                    rec.witness = Json{{"failure", "not multiplicative"}, {"iteration", it}};
                    return;
                }
                if (u.term_count() != frobenius_lift(u).term_count()) {
                    rec.passed = false;
                    rec.witness = Json{{"failure", "support collapsed"}, {"iteration", it}};
                    return;
                }
                TorusElement t = detail::random_sparse(alg, rng, 2 * n, n);
                TorusElement fu = frobenius_lift(u);
                if (!(fu * t == t * fu)) {
                    rec.passed = false;
                    rec.witness = Json{{"failure", "image not central"}, {"iteration", it}};
                    return;
                }
                ++cases;
            }
            rec.passed = true;
            rec.witness = Json{{"cases", cases}};
        });
}

inline CheckRecord check_torus_residue_roundtrip(unsigned n, std::uint64_t seed) {
    return run_check(
        "torus.residue_roundtrip" + detail::suffix(n),
        "residue decomposition over the N-th power subalgebra reassembles to the identity "
        "and every coefficient lies in the subalgebra",
        false, [n, seed](CheckRecord& rec) {
            auto root = RootData::make(n);
            std::mt19937_64 rng(seed + 3);
            unsigned cases = 0;
            for (const SkewForm& form :
                 {detail::builtin_form_rank2(), detail::builtin_form_rank3()}) {
                auto alg = TorusAlgebra::make(root, form, 1);
                for (int it = 0; it < 30; ++it) {
                    TorusElement t = detail::random_sparse(alg, rng, 2 * n, 2 * n);
                    auto parts = residue_decompose(t);
                    if (!(reassemble(parts, alg) == t)) {
                        rec.passed = false;
                        rec.witness = Json{{"failure", "roundtrip"}, {"iteration", it}};
                        return;
                    }
                    for (const auto& [key, coef] : parts)
                        for (const auto& [k, cheb] : coef.terms()) {
                            for (long long e : k)
                                if (e % n != 0) {
                                    rec.passed = false;
                                    rec.witness = Json{{"failure", "coefficient outside the "
                                                                   "subalgebra"}};
                                    return;
                                }
                            for (const auto& [a, c] : cheb.terms())
                                for (std::uint32_t idx : a)
                                    if (idx % n != 0) {
                                        rec.passed = false;
                                        rec.witness =
                                            Json{{"failure", "alpha index outside the "
                                                             "subalgebra"}};
                                        return;
                                    }
                        }
                    ++cases;
                }
            }
            rec.passed = true;
            rec.witness = Json{{"cases", cases}};
        });
}

// Shared driver for the projection-versus-oracle agreement checks; flips
// rec.passed to false and records a witness on the first disagreement.
inline void run_main1_cases(const TorusPtr& alg, const std::string& name, std::mt19937_64& rng,
                            unsigned monomials, unsigned sparse, CheckRecord& rec) {
    const unsigned n = alg->order();
    for (unsigned it = 0; it < monomials; ++it) {
        TorusElement t = detail::random_monomial(alg, rng, 2 * n, 2 * n);
        if (!(trace_over_frobenius(t) == brute_force_trace_frobenius(t))) {
            rec.passed = false;
            rec.witness =
                Json{{"form", name}, {"kind", "monomial"}, {"element", torus_element_to_json(t)}};
            return;
        }
    }
    for (unsigned it = 0; it < sparse; ++it) {
        TorusElement t = detail::random_sparse(alg, rng, 2 * n, 2 * n);
        if (!(trace_over_frobenius(t) == brute_force_trace_frobenius(t))) {
            rec.passed = false;
            rec.witness =
                Json{{"form", name}, {"kind", "sparse"}, {"element", torus_element_to_json(t)}};
            return;
        }
        // linearity over the subalgebra and symmetry, on the same samples
        TorusElement u = detail::random_sparse(alg, rng, 1, n);
        TorusElement fu = frobenius_lift(u);
        if (!(trace_over_frobenius(fu * t) == fu * trace_over_frobenius(t))) {
            rec.passed = false;
            rec.witness = Json{{"form", name}, {"kind", "linearity"}};
            return;
        }
        TorusElement s = detail::random_monomial(alg, rng, 2 * n, 0);
        if (!(trace_over_frobenius(t * s) == trace_over_frobenius(s * t))) {
            rec.passed = false;
            rec.witness = Json{{"form", name}, {"kind", "symmetry"}};
            return;
        }
    }
}

inline CheckRecord check_torus_main1_random_forms(unsigned n, std::uint64_t seed) {
    return run_check(
        "torus.main1.random_forms" + detail::suffix(n),
        "the residue filter trace over the N-th power subalgebra agrees with the "
        "brute-force left-multiplication trace on 100 random monomials (with Chebyshev "
        "alpha factors) and 20 sparse elements, for 5 random forms of rank 2 and 3",
        false, [n, seed](CheckRecord& rec) {
            auto root = RootData::make(n);
            std::mt19937_64 rng(seed + 4);
            rec.passed = true;
            Json forms = Json::array();
            for (int f = 0; f < 5; ++f) {
                const std::size_t rank = (f % 2 == 0) ? 2 : 3;
                SkewForm form = detail::random_form(rank, rng, 3);
                auto alg = TorusAlgebra::make(root, form, 1);
                const std::string name = "random" + std::to_string(f);
                run_main1_cases(alg, name, rng, 100, 20, rec);
                if (!rec.passed) return;
                forms.push_back(Json{{"name", name}, {"rank", rank}, {"P", form.matrix()}});
            }
            rec.witness = Json{{"forms", forms}, {"monomials_per_form", 100},
                               {"sparse_per_form", 20}};
        });
}

inline CheckRecord check_torus_main1_fixture(const SkewForm& form, std::size_t punctures,
                                             const std::string& tag, unsigned n,
                                             std::uint64_t seed) {
    return run_check(
        "torus.main1.fixture." + tag + detail::suffix(n),
        "the residue filter trace agrees with the brute-force trace on 100 random "
        "monomials over the fixture form",
        false, [&form, punctures, n, seed](CheckRecord& rec) {
            auto alg = TorusAlgebra::make(RootData::make(n), form, punctures);
            std::mt19937_64 rng(seed + 5);
            rec.passed = true;
            run_main1_cases(alg, "fixture", rng, 100, 20, rec);
            if (rec.passed)
                rec.witness = Json{{"rank", form.rank()}, {"monomials", 100}, {"sparse", 20}};
        });
}

inline CheckRecord check_torus_central_lattice(unsigned n) {
    return run_check(
        "torus.central_lattice" + detail::suffix(n),
        "membership in the central lattice is equivalent to commuting with every "
        "generator, exhaustively over [0,N)^rank, and N Z^rank is always contained",
        false, [n](CheckRecord& rec) {
            auto root = RootData::make(n);
            unsigned cases = 0;
            for (const SkewForm& form :
                 {detail::builtin_form_rank1(), detail::builtin_form_rank2(),
                  detail::builtin_form_rank3()}) {
                auto alg = TorusAlgebra::make(root, form, 0);
                Lattice lat = central_lattice(form, n);
                const std::size_t rank = form.rank();
                std::vector<long long> v(rank, 0);
                for (;;) {
                    bool commutes = true;
                    TorusElement xv = alg->monomial(ExpVec(v.begin(), v.end()));
                    for (std::size_t g = 0; g < rank && commutes; ++g) {
                        ExpVec e(rank, 0);
                        e[g] = 1;
                        TorusElement xg = alg->monomial(e);
                        commutes = xv * xg == xg * xv;
                    }
                    if (lat.member(v) != commutes) {
                        rec.passed = false;
                        rec.witness = Json{{"rank", rank}, {"vector", v},
                                           {"member", lat.member(v)}, {"commutes", commutes}};
                        return;
                    }
                    ++cases;
                    std::size_t i = 0;
                    while (i < rank && ++v[i] == n) v[i++] = 0;
                    if (i == rank) break;
                }
                for (std::size_t g = 0; g < rank; ++g) {
                    std::vector<long long> ne(rank, 0);
                    ne[g] = n;
                    if (!lat.member(ne)) {
                        rec.passed = false;
                        rec.witness = Json{{"failure", "N e_i missing"}, {"rank", rank}};
                        return;
                    }
                }
            }
            rec.passed = true;
            rec.witness = Json{{"cases", cases}};
        });
}

inline Json gram_witness(const GramCertificate& cert) {
    return Json{{"basis_size", cert.x_basis_size},
                {"symmetric", cert.symmetric},
                {"generalized_permutation", cert.generalized_permutation},
                {"permutation_sign", cert.permutation_sign},
                {"monomial_determinant", torus_element_to_json(cert.monomial_determinant)},
                {"alpha_blocks", cert.alpha_block_determinants.size()},
                {"nondegenerate", cert.nondegenerate}};
}

inline CheckRecord check_torus_gram(unsigned n) {
    return run_check(
        "torus.gram" + detail::suffix(n),
        "for ranks 1..3 (one punctured), the Gram matrix of the residue basis is a "
        "symmetric generalized permutation matrix with nonzero signed monomial "
        "determinant, for both the subalgebra and center pairings",
        false, [n](CheckRecord& rec) {
            auto root = RootData::make(n);
            Json all = Json::array();
            struct Case {
                SkewForm form;
                std::size_t punctures;
                const char* tag;
            };
            const Case cases[] = {{detail::builtin_form_rank1(), 0, "rank1"},
                                  {detail::builtin_form_rank1(), 1, "rank1_punctured"},
                                  {detail::builtin_form_rank2(), 0, "rank2"},
                                  {detail::builtin_form_rank3(), 0, "rank3"}};
            for (const Case& c : cases) {
                auto alg = TorusAlgebra::make(root, c.form, c.punctures);
                GramCertificate frob = gram_certificate(alg, PairingKind::frobenius_image);
                GramCertificate cent = gram_certificate(alg, PairingKind::center);
                if (!(frob.symmetric && frob.generalized_permutation && frob.nondegenerate &&
                      cent.symmetric && cent.generalized_permutation && cent.nondegenerate)) {
                    rec.passed = false;
                    rec.witness = Json{{"case", c.tag},
                                       {"frobenius", gram_witness(frob)},
                                       {"center", gram_witness(cent)}};
                    return;
                }
                all.push_back(Json{{"case", c.tag},
                                   {"frobenius", gram_witness(frob)},
                                   {"center", gram_witness(cent)}});
            }
            // frozen rank-1 determinant at N = 3: basis {1, x, x^2} pairs as
            // (0,0), (1,2), (2,1) with product x^6 and a transposition sign
            if (n == 3) {
                auto alg = TorusAlgebra::make(root, detail::builtin_form_rank1(), 0);
                GramCertificate frob = gram_certificate(alg, PairingKind::frobenius_image);
                TorusElement expected =
                    alg->monomial(ExpVec{6}) * Cyclotomic(root, Rational(-1));
                if (!(frob.monomial_determinant == expected)) {
                    rec.passed = false;
                    rec.witness = Json{{"case", "rank1 frozen determinant"},
                                       {"got", torus_element_to_json(frob.monomial_determinant)}};
                    return;
                }
            }
            rec.passed = true;
            rec.witness = std::move(all);
        });
}

inline CheckRecord check_torus_gram_fixture(const SkewForm& form, std::size_t punctures,
                                            const std::string& tag, unsigned n) {
    return run_check(
        "torus.gram.fixture." + tag + detail::suffix(n),
        "the Gram certificate of the fixture form is a symmetric generalized permutation "
        "matrix with nonzero determinant for both pairings",
        false, [&form, punctures, n](CheckRecord& rec) {
            auto alg = TorusAlgebra::make(RootData::make(n), form, punctures);
            GramCertificate frob = gram_certificate(alg, PairingKind::frobenius_image);
            GramCertificate cent = gram_certificate(alg, PairingKind::center);
            rec.passed = frob.symmetric && frob.generalized_permutation && frob.nondegenerate &&
                         cent.symmetric && cent.generalized_permutation && cent.nondegenerate;
            rec.witness =
                Json{{"frobenius", gram_witness(frob)}, {"center", gram_witness(cent)}};
        });
}

inline CheckRecord check_torus_division(unsigned n, std::uint64_t seed) {
    return run_check(
        "torus.division" + detail::suffix(n),
        "50 random nonzero elements of the rank-1 torus (and 5 of rank 2) over the "
        "fraction field of the N-th power subalgebra have verified two-sided inverses",
        false, [n, seed](CheckRecord& rec) {
            auto root = RootData::make(n);
            std::mt19937_64 rng(seed + 6);
            unsigned cases = 0;
            auto run_rank = [&](const SkewForm& form, int count) {
                auto alg = TorusAlgebra::make(root, form, 0);
                for (int it = 0; it < count; ++it) {
                    TorusElement t = alg->zero();
                    while (t.is_zero()) t = detail::random_sparse(alg, rng, 2 * n, 0);
                    // construction throws NotInvertible unless t*s = s*t = 1
                    // is re-verified from scratch
                    DivisionWitness w = division_witness(t);
                    (void)w;
                    ++cases;
                }
            };
            run_rank(detail::builtin_form_rank1(), 50);
            run_rank(detail::builtin_form_rank2(), 5);
            bool zero_rejected = false;
            try {
                auto alg = TorusAlgebra::make(root, detail::builtin_form_rank1(), 0);
                division_witness(alg->zero());
            } catch (const NotInvertible&) {
                zero_rejected = true;
            }
            rec.passed = zero_rejected;
            rec.witness = Json{{"cases", cases}, {"zero_rejected", zero_rejected}};
        });
}

// ---------------------------------------------------------------------------
// Surface checks.

inline CheckRecord check_surface_table(const std::string& fixture_dir, unsigned n) {
    return run_check(
        "surface.table" + detail::suffix(n),
        "the four reference surfaces give r = 2,3,2,1, arc counts 6,9,6,2, evenly "
        "punctured circle counts 0,1,0,0, and dimensions N^{3r} and N^{3r-|Lambda|-P}",
        false, [&fixture_dir, n](CheckRecord& rec) {
            struct Expected {
                const char* file;
                long long r;
                std::size_t arcs;
                std::size_t lambda;
                unsigned long dim_exp_subalgebra;  // frozen: 3r
                unsigned long dim_exp_center;      // frozen: 3r - |Lambda| - P
            };
            const Expected table[] = {{"triangle.json", 2, 6, 0, 6, 6},
                                      {"square.json", 3, 9, 1, 9, 8},
                                      {"annulus_1_1.json", 2, 6, 0, 6, 6},
                                      {"disk_punctured.json", 1, 2, 0, 3, 2}};
            Json rows = Json::array();
            for (const Expected& e : table) {
                PbSurface s = surface_from_json(load_json_file(fixture_dir + "/" + e.file));
                ExpectedDims dims = expected_dims(s, n);
                const Integer base(static_cast<long>(n));
                const bool ok = s.r_invariant() == e.r && s.tau_bar_size() == e.arcs &&
                                s.lambda_circles().size() == e.lambda &&
                                dims.over_frobenius == integer_pow(base, e.dim_exp_subalgebra) &&
                                dims.over_center == integer_pow(base, e.dim_exp_center);
                rows.push_back(Json{{"surface", e.file},
                                    {"r", s.r_invariant()},
                                    {"arcs", s.tau_bar_size()},
                                    {"lambda", s.lambda_circles().size()},
                                    {"dim_over_subalgebra", dims.over_frobenius.get_str()},
                                    {"dim_over_center", dims.over_center.get_str()},
                                    {"ok", ok}});
                if (!ok) {
                    rec.passed = false;
                    rec.witness = std::move(rows);
                    return;
                }
            }
            // the two degenerate surfaces are rejected rather than mis-counted
            bool monogon_rejected = false, bigon_rejected = false;
            try {
                (void)PbSurface(0, {1}, 0).tau_bar_size();
            } catch (const UnsupportedSurface&) {
                monogon_rejected = true;
            }
            try {
                (void)PbSurface(0, {2}, 0).tau_bar_size();
            } catch (const UnsupportedSurface&) {
                bigon_rejected = true;
            }
            rec.passed = monogon_rejected && bigon_rejected;
            rec.witness = Json{{"rows", std::move(rows)},
                               {"monogon_rejected", monogon_rejected},
                               {"bigon_rejected", bigon_rejected}};
        });
}

inline CheckRecord check_square_b_membership(const SurfaceFormFixture& fix, unsigned n,
                                             std::uint64_t seed) {
    return run_check(
        "surface.square.b_membership" + detail::suffix(n),
        "the alternating-pattern membership predicate agrees with the generator lattice "
        "on every residue pattern over the evenly punctured circle's arcs",
        false, [&fix, n, seed](CheckRecord& rec) {
            BSpec spec{fix.layout, n};
            Lattice lat = b_generators(spec);
            const auto& arcs = fix.layout.lambda_arcs(0);
            std::mt19937_64 rng(seed + 7);
            unsigned cases = 0, members = 0;
            std::vector<long long> w(arcs.size(), 0);
            for (;;) {
                std::vector<long long> v(fix.layout.size, 0);
                for (std::size_t i = 0; i < fix.layout.size; ++i)
                    v[i] = n * detail::pick(rng, -2, 2);
                for (std::size_t i = 0; i < arcs.size(); ++i) v[arcs[i]] += w[i];
                const bool pred = b_membership(v, spec);
                if (pred != lat.member(v)) {
                    rec.passed = false;
                    rec.witness = Json{{"vector", v}, {"predicate", pred},
                                       {"lattice", lat.member(v)}};
                    return;
                }
                if (pred) ++members;
                // a vector that is off by one in a non-pattern coordinate must drop out
                std::vector<long long> bad = v;
                bool found_off = false;
                for (std::size_t i = 0; i < fix.layout.size && !found_off; ++i) {
                    bool on_lambda = false;
                    for (std::size_t a : arcs) on_lambda = on_lambda || a == i;
                    if (!on_lambda) {
                        bad[i] += 1;
                        found_off = true;
                    }
                }
                if (found_off && (b_membership(bad, spec) || lat.member(bad))) {
                    rec.passed = false;
                    rec.witness = Json{{"vector", bad}, {"failure", "off-pattern vector "
                                                                    "accepted"}};
                    return;
                }
                ++cases;
                std::size_t i = 0;
                while (i < w.size() && ++w[i] == n) w[i++] = 0;
                if (i == w.size()) break;
            }
            // exactly the N alternating levels (k, N-k, ...) are members
            rec.passed = members == n;
            rec.witness = Json{{"patterns", cases}, {"members", members}};
        });
}

inline CheckRecord check_square_center_oracle(const SurfaceFormFixture& fix, unsigned n,
                                              std::uint64_t seed) {
    return run_check(
        "surface.square.center_oracle" + detail::suffix(n),
        "the center projection trace with the pattern-subgroup lattice agrees with the "
        "brute-force trace over its transversal basis on 50 random monomials (fewer when "
        "the transversal is large; skipped when it is not enumerable)",
        false, [&fix, n, seed](CheckRecord& rec) {
            auto alg = TorusAlgebra::make(RootData::make(n), fix.form, fix.punctures);
            BSpec spec{fix.layout, n};
            Lattice lat = b_generators(spec);
            if (lat.index() > 500000) {
                rec.passed = true;
                rec.witness = Json{{"skipped", "pattern subgroup index too large to enumerate"},
                                   {"index", lat.index().get_str()}};
                return;
            }
            CosetBasis basis = CosetBasis::make(alg, lat);
            const int iters = basis.size() <= 10000 ? 50 : 4;
            std::mt19937_64 rng(seed + 8);
            unsigned cases = 0;
            for (int it = 0; it < iters; ++it) {
                TorusElement t = detail::random_monomial(alg, rng, 2 * n, 0);
                if (!(trace_over_center(t, lat) == brute_force_trace_center(t, basis))) {
                    rec.passed = false;
                    rec.witness = Json{{"iteration", it}, {"element", torus_element_to_json(t)}};
                    return;
                }
                ++cases;
            }
            rec.passed = true;
            rec.witness = Json{{"cases", cases}, {"basis_size", basis.size()}};
        });
}

inline CheckRecord check_square_b_vs_central(const SurfaceFormFixture& fix, unsigned n) {
    return run_check(
        "surface.square.b_vs_central" + detail::suffix(n),
        "exploratory: whether the pattern subgroup equals the full central lattice of "
        "the fixture form (left open in general; reported, never asserted)",
        true, [&fix, n](CheckRecord& rec) {
            BSpec spec{fix.layout, n};
            Lattice b = b_generators(spec);
            Lattice central = central_lattice(fix.form, n);
            bool equal = b.index() == central.index();
            if (equal) {
                const IntMat& gen = central.generators();
                for (std::size_t col = 0; col < gen[0].size() && equal; ++col) {
                    std::vector<long long> v(gen.size());
                    for (std::size_t i = 0; i < gen.size(); ++i)
                        v[i] = static_cast<long long>(gen[i][col].get_si());
                    equal = b.member(v);
                }
            }
            rec.passed = true;  // informational: both outcomes are acceptable
            rec.witness = Json{{"pattern_subgroup_index", b.index().get_str()},
                               {"central_lattice_index", central.index().get_str()},
                               {"equal", equal}};
        });
}

// ---------------------------------------------------------------------------
// Specialization checks.

struct PointCase {
    std::string tag;
    std::string m11, m12, m21, m22;
    bool expect_nondegenerate;
};

// The three reference points all have an off-diagonal zero, which puts them
// inside the degenerate locus: b^i c^{N-i} becomes a nonzero central nilpotent
// and the pairing picks up a radical. Nondegeneracy, which holds away from a
// proper closed subset, is certified at the three dense points instead.
inline std::vector<PointCase> builtin_point_cases() {
    return {{"identity", "1", "0", "0", "1", false},
            {"diag_2_half", "2", "0", "0", "1/2", false},
            {"lower_unipotent", "1", "0", "1", "1", false},
            {"dense_1112", "1", "1", "1", "2", true},
            {"dense_2111", "2", "1", "1", "1", true},
            {"offdiag_0111", "0", "1", "-1", "1", true}};
}

inline SLPoint point_from_case(const RootPtr& root, const PointCase& pc) {
    return SLPoint(parse_scalar(root, pc.m11), parse_scalar(root, pc.m12),
                   parse_scalar(root, pc.m21), parse_scalar(root, pc.m22));
}

inline CheckRecord check_specialization_point(const PointCase& pc, unsigned n,
                                              std::uint64_t seed) {
    return run_check(
        "specialize.point." + pc.tag + detail::suffix(n),
        "specializing at the point yields a closed algebra of dimension N^3 with "
        "symmetric normalized trace, Trace(1) = 1, and the expected Gram "
        "(non)degeneracy",
        false, [&pc, n, seed](CheckRecord& rec) {
            auto root = RootData::make(n);
            auto ctx = OqContext::make(root);
            SLPoint rho = point_from_case(root, pc);
            Specialization sp = specialize(ctx, rho, false, seed);
            const std::size_t want_dim = static_cast<std::size_t>(n) * n * n;
            const bool dim_ok = sp.algebra.dim() == want_dim;
            const Cyclotomic one(root, Rational(1));
            const bool trace_one = sp.algebra.trace(sp.algebra.unit()) == one;
            FrobeniusCertificate<Cyclotomic> cert = frobenius_certificate(sp.algebra);
            const bool gram_ok = cert.nondegenerate == pc.expect_nondegenerate;
            rec.passed = dim_ok && trace_one && cert.symmetric && gram_ok;
            rec.witness = Json{{"dim", sp.algebra.dim()},
                               {"basis", sp.a_basis ? "a^i b^j c^k" : "b^j c^k d^l"},
                               {"trace_of_unit_is_one", trace_one},
                               {"symmetric", cert.symmetric},
                               {"gram_determinant", cert.determinant.to_string()},
                               {"nondegenerate", cert.nondegenerate},
                               {"expected_nondegenerate", pc.expect_nondegenerate}};
        });
}

inline CheckRecord check_specialization_fixture(const SLPoint& rho,
                                                std::optional<bool> expectation,
                                                const std::string& tag, unsigned n,
                                                std::uint64_t seed, bool exploratory_mode) {
    const bool hard_gram = expectation.has_value();
    return run_check(
        "specialize.fixture." + tag + detail::suffix(n),
        hard_gram ? "the fixture point specializes to a closed N^3-dimensional algebra "
                    "with symmetric trace, Trace(1) = 1, and the expected Gram rank"
                  : "the fixture point specializes to a closed N^3-dimensional algebra "
                    "with symmetric trace and Trace(1) = 1; the Gram determinant is "
                    "reported",
        false, [&rho, expectation, n, seed, exploratory_mode](CheckRecord& rec) {
            auto root = RootData::make(n);
            auto ctx = OqContext::make(root);
            Specialization sp = specialize(ctx, rho, exploratory_mode, seed);
            const std::size_t want_dim = static_cast<std::size_t>(n) * n * n;
            const Cyclotomic one(root, Rational(1));
            const bool dim_ok = sp.algebra.dim() == want_dim;
            const bool trace_one = sp.algebra.trace(sp.algebra.unit()) == one;
            FrobeniusCertificate<Cyclotomic> cert = frobenius_certificate(sp.algebra);
            bool gram_ok = true;
            if (expectation) gram_ok = cert.nondegenerate == *expectation;
            rec.passed = dim_ok && trace_one && cert.symmetric && gram_ok;
            rec.witness = Json{{"dim", sp.algebra.dim()},
                               {"basis", sp.a_basis ? "a^i b^j c^k" : "b^j c^k d^l"},
                               {"trace_of_unit_is_one", trace_one},
                               {"symmetric", cert.symmetric},
                               {"gram_determinant", cert.determinant.to_string()},
                               {"nondegenerate", cert.nondegenerate}};
        });
}

inline CheckRecord check_specialization_tensor(unsigned n, std::uint64_t seed) {
    return run_check(
        "specialize.tensor" + detail::suffix(n),
        "the tensor product of two specializations is a closed algebra of dimension N^6 "
        "with Trace(1) = 1",
        false, [n, seed](CheckRecord& rec) {
            auto root = RootData::make(n);
            auto ctx = OqContext::make(root);
            auto cases = builtin_point_cases();
            FiniteDimAlgebra<Cyclotomic> prod = tensor_specializations(
                ctx, {point_from_case(root, cases[3]), point_from_case(root, cases[4])}, seed);
            const std::size_t want = static_cast<std::size_t>(n) * n * n;
            const Cyclotomic one(root, Rational(1));
            rec.passed = prod.dim() == want * want && prod.trace(prod.unit()) == one;
            rec.witness = Json{{"dim", prod.dim()},
                               {"trace_of_unit_is_one", prod.trace(prod.unit()) == one}};
        });
}

inline CheckRecord check_specialization_w_point(unsigned n, std::uint64_t seed) {
    return run_check(
        "specialize.w_point" + detail::suffix(n),
        "exploratory: at a point with both diagonal entries zero the d-side monomial "
        "table still closes into an N^3-dimensional algebra; the trace theory for such "
        "points is left open, so this is reported only",
        true, [n, seed](CheckRecord& rec) {
            auto root = RootData::make(n);
            auto ctx = OqContext::make(root);
            SLPoint rho(Cyclotomic(root, Rational(0)), Cyclotomic(root, Rational(1)),
                        Cyclotomic(root, Rational(-1)), Cyclotomic(root, Rational(0)));
            bool rejected_normally = false;
            try {
                specialize(ctx, rho, false, seed);
            } catch (const InsideW&) {
                rejected_normally = true;
            }
            Specialization sp = specialize(ctx, rho, true, seed);
            FrobeniusCertificate<Cyclotomic> cert = frobenius_certificate(sp.algebra);
            rec.passed = true;  // informational
            rec.witness = Json{{"rejected_without_exploratory", rejected_normally},
                               {"dim", sp.algebra.dim()},
                               {"gram_determinant", cert.determinant.to_string()},
                               {"nondegenerate", cert.nondegenerate}};
        });
}

// ---------------------------------------------------------------------------
// Suite runners.

inline std::vector<CheckRecord> run_bigon_suite(const SuiteConfig& cfg) {
    std::vector<CheckRecord> out;
    out.push_back(check_bigon_frobenius_hom(cfg.n));
    out.push_back(check_bigon_center_generators(cfg.n));
    out.push_back(check_bigon_trace_frobenius_table(cfg.n));
    out.push_back(check_bigon_trace_frobenius_remark(cfg.n));
    out.push_back(check_bigon_trace_center_table(cfg.n));
    out.push_back(check_bigon_trace_center_oracle(cfg.n, cfg.seed));
    return out;
}

struct TorusFixture {
    SkewForm form;
    std::size_t punctures = 0;
    std::string tag;
};

inline std::vector<CheckRecord> run_torus_suite(const SuiteConfig& cfg,
                                                const std::optional<TorusFixture>& fixture) {
    std::vector<CheckRecord> out;
    out.push_back(check_chebyshev_trace(cfg.n));
    out.push_back(check_torus_product_laws(cfg.n, cfg.seed));
    out.push_back(check_torus_weyl(cfg.n, cfg.seed));
    out.push_back(check_torus_frobenius_lift(cfg.n, cfg.seed));
    out.push_back(check_torus_residue_roundtrip(cfg.n, cfg.seed));
    out.push_back(check_torus_central_lattice(cfg.n));
    out.push_back(check_torus_main1_random_forms(cfg.n, cfg.seed));
    out.push_back(check_torus_gram(cfg.n));
    out.push_back(check_torus_division(cfg.n, cfg.seed));
    if (fixture) {
        out.push_back(check_torus_main1_fixture(fixture->form, fixture->punctures, fixture->tag,
                                                cfg.n, cfg.seed));
        out.push_back(
            check_torus_gram_fixture(fixture->form, fixture->punctures, fixture->tag, cfg.n));
    }
    return out;
}

inline std::vector<CheckRecord> run_surface_suite(const SuiteConfig& cfg) {
    std::vector<CheckRecord> out;
    out.push_back(check_surface_table(cfg.fixture_dir, cfg.n));
    SurfaceFormFixture fix =
        surface_form_from_json(load_json_file(cfg.fixture_dir + "/square_pbar.json"), cfg.n);
    out.push_back(check_square_b_membership(fix, cfg.n, cfg.seed));
    out.push_back(check_square_center_oracle(fix, cfg.n, cfg.seed));
    if (cfg.exploratory) out.push_back(check_square_b_vs_central(fix, cfg.n));
    return out;
}

inline std::vector<CheckRecord> run_specialize_suite(const SuiteConfig& cfg) {
    std::vector<CheckRecord> out;
    for (const PointCase& pc : builtin_point_cases())
        out.push_back(check_specialization_point(pc, cfg.n, cfg.seed));
    out.push_back(check_specialization_tensor(cfg.n, cfg.seed));
    if (cfg.exploratory) out.push_back(check_specialization_w_point(cfg.n, cfg.seed));
    return out;
}

// ---------------------------------------------------------------------------
// Acceptance suite: the ten headline criteria at their fixed parameters.

namespace detail {

inline CheckRecord merge_checks(std::string name, std::string statement,
                                std::vector<CheckRecord> subs) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.statement = std::move(statement);
    rec.exploratory = false;
    rec.passed = true;
    Json parts = Json::array();
    for (CheckRecord& s : subs) {
        rec.passed = rec.passed && s.passed;
        rec.elapsed_ms += s.elapsed_ms;
        parts.push_back(Json{{"name", s.name},
                             {"status", s.passed ? "pass" : "fail"},
                             {"witness", s.witness}});
    }
    rec.witness = std::move(parts);
    return rec;
}

inline CheckRecord rename_check(CheckRecord rec, std::string name) {
    rec.name = std::move(name);
    return rec;
}

}  // namespace detail

// Runtime budgets in milliseconds, indexed by criterion (1-based).
inline long long acceptance_budget_ms(std::size_t criterion) {
    static const long long budgets[] = {0,     1000,  60000, 5000,  10000, 60000,
                                        60000, 120000, 30000, 30000, 1000};
    return budgets[criterion];
}

inline std::vector<CheckRecord> run_acceptance_suite(std::uint64_t seed,
                                                     const std::string& fixture_dir,
                                                     bool exploratory) {
    std::vector<CheckRecord> out;
    out.push_back(detail::merge_checks(
        "acceptance.01.chebyshev_trace",
        "for N in {3,5} and k = 0..4N the Chebyshev index filter equals T_k when N | k and 0 "
        "otherwise, and matches the brute-force module trace",
        {check_chebyshev_trace(3), check_chebyshev_trace(5)}));
    out.push_back(detail::merge_checks(
        "acceptance.02.bigon_frobenius_hom",
        "for N in {3,5,7} the N-th powers of a, b, c, d pairwise commute, are central, and "
        "satisfy a^N d^N - b^N c^N = 1",
        {check_bigon_frobenius_hom(3), check_bigon_frobenius_hom(5), check_bigon_frobenius_hom(7)}));
    out.push_back(detail::merge_checks(
        "acceptance.03.bigon_trace_over_subalgebra",
        "at N = 3 the trace over the N-th power subalgebra filters d^{k1} b^{k2} c^{k3} by "
        "N-divisibility for 0 <= k_i <= 2N, and Tr(a d b^2 c^2) = q^{-2} b^3 c^3",
        {check_bigon_trace_frobenius_table(3), check_bigon_trace_frobenius_remark(3)}));
    out.push_back(detail::merge_checks(
        "acceptance.04.bigon_trace_over_center",
        "at N = 3 the trace over the center filters d^{k1} b^{k2} by N-divisibility for "
        "0 <= k_i <= 2N and agrees with the brute-force transversal oracle on 50 random "
        "elements",
        {check_bigon_trace_center_table(3), check_bigon_trace_center_oracle(3, seed)}));
    out.push_back(detail::rename_check(check_torus_main1_random_forms(3, seed),
                                       "acceptance.05.torus_trace_oracle"));
    out.push_back(run_check(
        "acceptance.06.square_pattern_subgroup",
        "for the square-surface fixture at N = 3, pattern membership agrees with the "
        "generator lattice on all 3^4 residue patterns and the center projection trace "
        "agrees with the brute-force transversal oracle on 50 random monomials",
        false, [seed, &fixture_dir](CheckRecord& rec) {
            SurfaceFormFixture fix =
                surface_form_from_json(load_json_file(fixture_dir + "/square_pbar.json"), 3);
            CheckRecord membership = check_square_b_membership(fix, 3, seed);
            CheckRecord oracle = check_square_center_oracle(fix, 3, seed);
            rec.passed = membership.passed && oracle.passed;
            rec.witness = Json::array({Json{{"name", membership.name},
                                            {"status", membership.passed ? "pass" : "fail"},
                                            {"witness", membership.witness}},
                                       Json{{"name", oracle.name},
                                            {"status", oracle.passed ? "pass" : "fail"},
                                            {"witness", oracle.witness}}});
        }));
    {
        std::vector<CheckRecord> subs;
        for (const PointCase& pc : builtin_point_cases())
            subs.push_back(check_specialization_point(pc, 3, seed));
        subs.push_back(check_specialization_tensor(3, seed));
        out.push_back(detail::merge_checks(
            "acceptance.07.specialization",
            "at N = 3 each reference point specializes to a closed 27-dimensional algebra "
            "with symmetric trace and Trace(1) = 1; the Gram pairing is nonsingular at the "
            "three dense points and provably singular at the three points with an "
            "off-diagonal zero; a tensor of two specializations has dimension 729",
            std::move(subs)));
    }
    out.push_back(
        detail::rename_check(check_torus_division(3, seed), "acceptance.08.division"));
    out.push_back(detail::merge_checks(
        "acceptance.09.torus_gram",
        "for N in {3,5} and ranks up to 3 the residue-basis Gram matrix is a symmetric "
        "generalized permutation matrix with nonzero signed monomial determinant for both "
        "pairings",
        {check_torus_gram(3), check_torus_gram(5)}));
    out.push_back(
        detail::rename_check(check_surface_table(fixture_dir, 3), "acceptance.10.surface_table"));
    if (exploratory) {
        out.push_back(run_check(
            "exploratory.square_b_vs_central",
            "exploratory: pattern subgroup versus full central lattice for the square "
            "fixture",
            true, [&fixture_dir](CheckRecord& rec) {
                SurfaceFormFixture fix =
                    surface_form_from_json(load_json_file(fixture_dir + "/square_pbar.json"), 3);
                CheckRecord inner = check_square_b_vs_central(fix, 3);
                rec.passed = true;
                rec.witness = inner.witness;
            }));
        out.push_back(check_specialization_w_point(3, seed));
    }
    return out;
}

}  // namespace qtrace
