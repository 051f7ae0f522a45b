#pragma once

// The quantized coordinate ring of SL_2 at q = zeta^2 as a PBW-rewriting
// algebra. Generators a, b, c, d with
//   ba = q^2 ab,  ca = q^2 ac,  db = q^2 bd,  dc = q^2 cd,  bc = cb,
//   ad = 1 + q^{-2} bc,  da = 1 + q^2 bc,
// normal-form monomials a^i b^j c^k and b^j c^k d^l (never both a and d).
// On top of the rewriting engine: Frobenius generators a^N..d^N and their
// verification, elimination of a into the rank-3 (d, b, c) quantum Laurent
// torus, the localized trace maps, the center generators b^i c^{N-i}, and
// specialization at points of SL_2 to N^3-dimensional algebras.

#include <qtrace/algebra.hpp>
#include <qtrace/qtorus.hpp>

#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtrace {

struct InsideW : std::runtime_error {
    explicit InsideW(const std::string& what) : std::runtime_error(what) {}
};

struct OqMono {
    long long a = 0, b = 0, c = 0, d = 0;
    friend auto operator<=>(const OqMono&, const OqMono&) = default;
};

class OqContext;
using OqPtr = std::shared_ptr<const OqContext>;

class OqElement {
  public:
    OqElement() = default;
    explicit OqElement(OqPtr ctx) : ctx_(std::move(ctx)) {}

    const OqPtr& context() const { return ctx_; }
    const std::map<OqMono, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const OqMono& m, const Cyclotomic& coef) {
        if (m.a < 0 || m.b < 0 || m.c < 0 || m.d < 0)
            throw std::invalid_argument("negative exponent in polynomial monomial");
        if (m.a != 0 && m.d != 0) throw std::invalid_argument("monomial mixes a and d");
        if (coef.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, coef);
        } else {
            it->second = it->second + coef;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend OqElement operator+(const OqElement& x, const OqElement& y) {
        OqElement out = x;
        for (const auto& [m, c] : y.terms_) out.add_term(m, c);
        return out;
    }
    friend OqElement operator-(const OqElement& x, const OqElement& y) {
        OqElement out = x;
        for (const auto& [m, c] : y.terms_) out.add_term(m, -c);
        return out;
    }
    friend OqElement operator-(const OqElement& x) {
        OqElement out(x.ctx_);
        for (const auto& [m, c] : x.terms_) out.terms_.emplace(m, -c);
        return out;
    }
    friend OqElement operator*(const OqElement& x, const Cyclotomic& s) {
        OqElement out(x.ctx_);
        for (const auto& [m, c] : x.terms_) out.add_term(m, c * s);
        return out;
    }
    friend OqElement operator*(const OqElement& x, const OqElement& y);
    friend bool operator==(const OqElement& x, const OqElement& y) { return x.terms_ == y.terms_; }

  private:
    OqPtr ctx_;
    std::map<OqMono, Cyclotomic> terms_;
};

class OqContext : public std::enable_shared_from_this<OqContext> {
  public:
    static OqPtr make(RootPtr root) { return OqPtr(new OqContext(std::move(root))); }

    const RootPtr& root() const { return root_; }
    unsigned order() const { return root_->order(); }
    Cyclotomic q(long long m) const { return q_power(root_, m); }

    OqElement zero() const { return OqElement(shared_from_this()); }
    OqElement one() const { return monomial(OqMono{}); }
    OqElement scalar(const Cyclotomic& c) const {
        OqElement x(shared_from_this());
        x.add_term(OqMono{}, c);
        return x;
    }
    OqElement monomial(const OqMono& m) const {
        OqElement x(shared_from_this());
        x.add_term(m, Cyclotomic(root_, Rational(1)));
        return x;
    }
    OqElement gen(char g) const {
        OqMono m;
        switch (g) {
            case 'a': m.a = 1; break;
            case 'b': m.b = 1; break;
            case 'c': m.c = 1; break;
            case 'd': m.d = 1; break;
            default: throw std::invalid_argument("unknown generator letter");
        }
        return monomial(m);
    }

    // x * g in normal form, for a single normal-form monomial x
    void mul_by_generator(const OqMono& m, const Cyclotomic& coef, char g, OqElement& out) const {
        switch (g) {
            case 'a':
                if (m.d == 0) {
                    out.add_term(OqMono{m.a + 1, m.b, m.c, 0}, coef * q(2 * (m.b + m.c)));
                } else {
                    out.add_term(OqMono{0, m.b, m.c, m.d - 1}, coef);
                    out.add_term(OqMono{0, m.b + 1, m.c + 1, m.d - 1}, coef * q(4 * m.d - 2));
                }
                return;
            case 'b':
                out.add_term(OqMono{m.a, m.b + 1, m.c, m.d}, coef * q(2 * m.d));
                return;
            case 'c':
                out.add_term(OqMono{m.a, m.b, m.c + 1, m.d}, coef * q(2 * m.d));
                return;
            case 'd':
                if (m.a == 0) {
                    out.add_term(OqMono{0, m.b, m.c, m.d + 1}, coef);
                } else {
                    Cyclotomic base = coef * q(-2 * (m.b + m.c));
                    out.add_term(OqMono{m.a - 1, m.b, m.c, 0}, base);
                    out.add_term(OqMono{m.a - 1, m.b + 1, m.c + 1, 0}, base * q(-2));
                }
                return;
            default:
                throw std::invalid_argument("unknown generator letter");
        }
    }

  private:
    explicit OqContext(RootPtr root) : root_(std::move(root)) {}
    RootPtr root_;
};

inline OqElement mul_by_generator(const OqElement& x, char g) {
    OqElement out(x.context());
    for (const auto& [m, c] : x.terms()) x.context()->mul_by_generator(m, c, g, out);
    return out;
}

inline OqElement operator*(const OqElement& x, const OqElement& y) {
    if (!x.ctx_ || !y.ctx_) throw std::invalid_argument("uninitialized element");
    if (x.ctx_->order() != y.ctx_->order()) throw FieldMismatch("elements over different roots");
    OqElement out(x.ctx_);
    for (const auto& [m2, c2] : y.terms_) {
        OqElement cur = x;
        for (long long i = 0; i < m2.a; ++i) cur = mul_by_generator(cur, 'a');
        for (long long i = 0; i < m2.b; ++i) cur = mul_by_generator(cur, 'b');
        for (long long i = 0; i < m2.c; ++i) cur = mul_by_generator(cur, 'c');
        for (long long i = 0; i < m2.d; ++i) cur = mul_by_generator(cur, 'd');
        for (const auto& [m, c] : cur.terms_) out.add_term(m, c * c2);
    }
    return out;
}

inline OqElement oq_pow(const OqElement& x, long long n) {
    if (n < 0) throw std::invalid_argument("negative power of a polynomial element");
    OqElement out = x.context()->one();
    for (long long i = 0; i < n; ++i) out = out * x;
    return out;
}

// normal form of a word given as (letter, exponent) pairs, multiplied left to right
inline OqElement normal_form(const OqPtr& ctx, const std::vector<std::pair<char, long long>>& word) {
    OqElement out = ctx->one();
    for (const auto& [g, e] : word) {
        if (e < 0) throw std::invalid_argument("negative exponent in word");
        for (long long i = 0; i < e; ++i) out = mul_by_generator(out, g);
    }
    return out;
}

inline OqElement oq_commutator(const OqElement& x, const OqElement& y) { return x * y - y * x; }

// ---------------------------------------------------------------------------
// Frobenius generators and their verification.

struct FrobeniusGenerators {
    OqElement a, b, c, d;
};

inline FrobeniusGenerators frobenius_generators(const OqPtr& ctx) {
    const long long n = ctx->order();
    return {oq_pow(ctx->gen('a'), n), oq_pow(ctx->gen('b'), n), oq_pow(ctx->gen('c'), n),
            oq_pow(ctx->gen('d'), n)};
}

struct FrobeniusHomReport {
    bool pairwise_commute = false;
    bool determinant_identity = false;
    bool central = false;
    bool ok() const { return pairwise_commute && determinant_identity && central; }
};

// (i) the N-th powers commute pairwise; (ii) a^N d^N - b^N c^N = 1;
// (iii) each N-th power commutes with each generator. All in normal form.
inline FrobeniusHomReport verify_frobenius_hom(const OqPtr& ctx) {
    FrobeniusGenerators f = frobenius_generators(ctx);
    const std::vector<const OqElement*> caps{&f.a, &f.b, &f.c, &f.d};
    FrobeniusHomReport r;
    r.pairwise_commute = true;
    for (std::size_t i = 0; i < 4 && r.pairwise_commute; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (!oq_commutator(*caps[i], *caps[j]).is_zero()) {
                r.pairwise_commute = false;
                break;
            }
    r.determinant_identity = (f.a * f.d - f.b * f.c == ctx->one());
    r.central = true;
    for (std::size_t i = 0; i < 4 && r.central; ++i)
        for (char g : {'a', 'b', 'c', 'd'})
            if (!oq_commutator(*caps[i], ctx->gen(g)).is_zero()) {
                r.central = false;
                break;
            }
    return r;
}

// ---------------------------------------------------------------------------
// Elimination of a into the rank-3 (d, b, c) quantum Laurent torus.

inline TorusPtr dbc_torus(const RootPtr& root) {
    SkewForm form({"d", "b", "c"}, {{0, 2, 2}, {-2, 0, 0}, {-2, 0, 0}});
    return TorusAlgebra::make(root, form, 0);
}

inline TorusElement torus_pow(const TorusElement& x, long long n) {
    TorusElement out = x.algebra()->one();
    for (long long i = 0; i < n; ++i) out = out * x;
    return out;
}

// a = (1 + q^{-2} b c) d^{-1} = d^{-1} + q^2 d^{-1} b c in ordered form
inline TorusElement eliminated_a(const TorusPtr& t) {
    return t->monomial(ExpVec{-1, 0, 0}) + t->monomial(ExpVec{-1, 1, 1}) * q_power(t->root(), 2);
}

inline TorusElement eliminate_a(const OqElement& x, const TorusPtr& t) {
    TorusElement elim = eliminated_a(t);
    TorusElement out = t->zero();
    for (const auto& [m, coef] : x.terms()) {
        TorusElement img = torus_pow(elim, m.a);
        img = img * t->monomial(ExpVec{0, m.b, m.c});
        img = img * t->monomial(ExpVec{m.d, 0, 0});
        out = out + img * coef;
    }
    return out;
}

inline TorusElement trace_over_frobenius_fraction(const OqElement& x, const TorusPtr& t) {
    return trace_over_frobenius(eliminate_a(x, t));
}

inline TorusElement trace_over_center_fraction(const OqElement& x, const TorusPtr& t) {
    return trace_over_center(eliminate_a(x, t), central_lattice(*t));
}

// ---------------------------------------------------------------------------
// Center generators x_0 = 1, x_i = b^i c^{N-i}.

inline OqElement center_generator(const OqPtr& ctx, unsigned i) {
    const long long n = ctx->order();
    if (i >= ctx->order()) throw std::invalid_argument("center generator index out of range");
    if (i == 0) return ctx->one();
    return ctx->monomial(OqMono{0, static_cast<long long>(i), n - static_cast<long long>(i), 0});
}

struct CenterGeneratorReport {
    bool commute = false;      // every x_i commutes with a, b, c, d
    bool independent = false;  // distinct (d, b, c) residues mod N
    bool ok() const { return commute && independent; }
};

inline CenterGeneratorReport center_generator_check(const OqPtr& ctx) {
    const unsigned n = ctx->order();
    CenterGeneratorReport r;
    r.commute = true;
    for (unsigned i = 0; i < n && r.commute; ++i) {
        OqElement xi = center_generator(ctx, i);
        for (char g : {'a', 'b', 'c', 'd'})
            if (!oq_commutator(xi, ctx->gen(g)).is_zero()) {
                r.commute = false;
                break;
            }
    }
    TorusPtr t = dbc_torus(ctx->root());
    std::set<ExpVec> residues;
    for (unsigned i = 0; i < n; ++i) {
        auto parts = residue_decompose(eliminate_a(center_generator(ctx, i), t));
        for (const auto& [key, part] : parts) residues.insert(key.second);
        if (parts.size() != 1) {
            r.independent = false;
            return r;
        }
    }
    r.independent = residues.size() == n;
    return r;
}

// ---------------------------------------------------------------------------
// Specialization at a point of SL_2.

class SLPoint {
  public:
    SLPoint(Cyclotomic k11, Cyclotomic k12, Cyclotomic k21, Cyclotomic k22)
        : k11_(std::move(k11)), k12_(std::move(k12)), k21_(std::move(k21)), k22_(std::move(k22)) {
        Cyclotomic det = k11_ * k22_ - k12_ * k21_;
        if (!(det == k11_.one_like())) throw std::invalid_argument("point matrix must have determinant 1");
    }

    const Cyclotomic& k11() const { return k11_; }
    const Cyclotomic& k12() const { return k12_; }
    const Cyclotomic& k21() const { return k21_; }
    const Cyclotomic& k22() const { return k22_; }
    bool inside_w() const { return k11_.is_zero() && k22_.is_zero(); }

  private:
    Cyclotomic k11_, k12_, k21_, k22_;
};

struct Specialization {
    FiniteDimAlgebra<Cyclotomic> algebra;
    bool a_basis = true;  // monomial basis a^i b^j c^k if true, else b^j c^k d^l
};

namespace detail {

// Reduce an element modulo the point relations a^N = rho11, b^N = rho12,
// c^N = rho21, d^N = rho22 (all central), eliminating the letter that is not
// part of the chosen basis via a = rho22^{-1} (1 + q^{-2} b c) d^{N-1}
// (respectively d = rho11^{-1} (1 + q^2 b c) a^{N-1}).
inline std::map<OqMono, Cyclotomic> reduce_at_point(const OqPtr& ctx, OqElement x, const SLPoint& rho,
                                                    bool a_basis) {
    const long long n = ctx->order();
    auto exponent_reduce = [&](const OqElement& e) {
        OqElement out = ctx->zero();
        for (const auto& [m0, c0] : e.terms()) {
            OqMono m = m0;
            Cyclotomic c = c0;
            while (m.a >= n) {
                c = c * rho.k11();
                m.a -= n;
            }
            while (m.b >= n) {
                c = c * rho.k12();
                m.b -= n;
            }
            while (m.c >= n) {
                c = c * rho.k21();
                m.c -= n;
            }
            while (m.d >= n) {
                c = c * rho.k22();
                m.d -= n;
            }
            out.add_term(m, c);
        }
        return out;
    };

    x = exponent_reduce(x);
    while (true) {
        const OqMono* bad = nullptr;
        Cyclotomic bad_coef;
        for (const auto& [m, c] : x.terms())
            if ((a_basis && m.d > 0) || (!a_basis && m.a > 0)) {
                bad = &m;
                bad_coef = c;
                break;
            }
        if (!bad) break;
        OqMono m = *bad;
        OqElement rest = ctx->zero();
        for (const auto& [mm, cc] : x.terms())
            if (!(mm == m)) rest.add_term(mm, cc);
        OqElement replaced = ctx->zero();
        if (a_basis) {
            // b^j c^k d^l = (b^j c^k d^{l-1}) * d,  d = rho11^{-1} (1 + q^2 bc) a^{N-1}
            if (rho.k11().is_zero()) throw InsideW("cannot eliminate d at this point");
            OqElement subst =
                (ctx->one() + ctx->monomial(OqMono{0, 1, 1, 0}) * ctx->q(2)) *
                ctx->monomial(OqMono{n - 1, 0, 0, 0}) * rho.k11().inverse();
            replaced = ctx->monomial(OqMono{0, m.b, m.c, m.d - 1}) * subst * bad_coef;
        } else {
            // a^i b^j c^k = a^{i-1} * a * (b^j c^k),  a = rho22^{-1} (1 + q^{-2} bc) d^{N-1}
            if (rho.k22().is_zero()) throw InsideW("cannot eliminate a at this point");
            OqElement subst =
                (ctx->one() + ctx->monomial(OqMono{0, 1, 1, 0}) * ctx->q(-2)) *
                ctx->monomial(OqMono{0, 0, 0, n - 1}) * rho.k22().inverse();
            replaced = ctx->monomial(OqMono{m.a - 1, 0, 0, 0}) * subst *
                       ctx->monomial(OqMono{0, m.b, m.c, 0}) * bad_coef;
        }
        x = rest + exponent_reduce(replaced);
    }
    return x.terms();
}

}  // namespace detail

inline Specialization specialize(const OqPtr& ctx, const SLPoint& rho, bool exploratory = false,
                                 std::uint64_t seed = 20240613) {
    const long long n = ctx->order();
    bool a_basis;
    if (!rho.k11().is_zero()) {
        a_basis = true;
    } else if (!rho.k22().is_zero()) {
        a_basis = false;
    } else if (exploratory) {
        a_basis = false;  // the d-monomial table closes without eliminating anything
    } else {
        throw InsideW("point has vanishing upper-left and lower-right entries");
    }

    const std::size_t dim = static_cast<std::size_t>(n * n * n);
    std::vector<OqMono> basis(dim);
    std::vector<std::string> labels(dim);
    for (long long s1 = 0; s1 < n; ++s1)
        for (long long s2 = 0; s2 < n; ++s2)
            for (long long s3 = 0; s3 < n; ++s3) {
                std::size_t idx = static_cast<std::size_t>(s1 * n * n + s2 * n + s3);
                if (a_basis) {
                    basis[idx] = OqMono{s1, s2, s3, 0};
                    labels[idx] = "a^" + std::to_string(s1) + " b^" + std::to_string(s2) + " c^" +
                                  std::to_string(s3);
                } else {
                    basis[idx] = OqMono{0, s2, s3, s1};
                    labels[idx] = "b^" + std::to_string(s2) + " c^" + std::to_string(s3) + " d^" +
                                  std::to_string(s1);
                }
            }

    auto index_of = [&](const OqMono& m) -> std::size_t {
        long long s1 = a_basis ? m.a : m.d;
        if ((a_basis && m.d != 0) || (!a_basis && m.a != 0) || s1 >= n || m.b >= n || m.c >= n)
            throw BasisNotClosed("reduced monomial escapes the point basis");
        return static_cast<std::size_t>(s1 * n * n + m.b * n + m.c);
    };

    using Alg = FiniteDimAlgebra<Cyclotomic>;
    std::vector<std::vector<Alg::Sparse>> table(dim, std::vector<Alg::Sparse>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            OqElement prod = ctx->monomial(basis[i]) * ctx->monomial(basis[j]);
            Alg::Sparse entry;
            for (const auto& [m, c] : detail::reduce_at_point(ctx, prod, rho, a_basis))
                entry.emplace_back(static_cast<std::uint32_t>(index_of(m)), c);
            std::sort(entry.begin(), entry.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            table[i][j] = std::move(entry);
        }

    Cyclotomic zero(ctx->root());
    std::vector<Cyclotomic> unit(dim, zero);
    unit[0] = zero.one_like();
    Specialization s{Alg::make(std::move(labels), std::move(table), std::move(unit), zero, seed), a_basis};
    return s;
}

inline FiniteDimAlgebra<Cyclotomic> tensor_specializations(const OqPtr& ctx,
                                                           const std::vector<SLPoint>& points,
                                                           std::uint64_t seed = 20240613) {
    if (points.empty()) throw std::invalid_argument("tensor of zero points");
    FiniteDimAlgebra<Cyclotomic> acc = specialize(ctx, points[0], false, seed).algebra;
    for (std::size_t i = 1; i < points.size(); ++i)
        acc = tensor_product(acc, specialize(ctx, points[i], false, seed).algebra, seed);
    return acc;
}

inline std::string oq_to_string(const OqElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        if (!first) os << "  +  ";
        first = false;
        os << "(" << c.to_string() << ")";
        auto put = [&](char g, long long e) {
            if (e == 0) return;
            os << "*" << g;
            if (e != 1) os << "^" << e;
        };
        put('a', m.a);
        put('b', m.b);
        put('c', m.c);
        put('d', m.d);
    }
    return os.str();
}

}  // namespace qtrace
