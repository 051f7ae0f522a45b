#pragma once

// Quantum tori at an odd root of unity.
//
// Generators x_1..x_n with x_a x_b = q^{P(a,b)} x_b x_a for an antisymmetric
// integer form P, over Q(zeta) with q = zeta^2, together with central loop
// variables alpha_p carried in the product Chebyshev basis. Elements are kept
// in the ordered-monomial normal form x^k = x_1^{k_1} ... x_n^{k_n} with
// ChebPoly coefficients; all reordering phases are zeta powers produced by one
// shared phase accumulator.

#include <qtrace/chebpoly.hpp>
#include <qtrace/fraction.hpp>
#include <qtrace/lattice.hpp>
#include <qtrace/linalg.hpp>

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtrace {

struct LatticeNotCentral : std::runtime_error {
    explicit LatticeNotCentral(const std::string& what) : std::runtime_error(what) {}
};
struct BasisNotClosed : std::runtime_error {
    explicit BasisNotClosed(const std::string& what) : std::runtime_error(what) {}
};
struct DegeneratePairing : std::runtime_error {
    explicit DegeneratePairing(const std::string& what) : std::runtime_error(what) {}
};

inline long long mod_floor(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

class SkewForm {
  public:
    SkewForm() = default;
    SkewForm(std::vector<std::string> names, std::vector<std::vector<long long>> p)
        : names_(std::move(names)), p_(std::move(p)) {
        const std::size_t n = names_.size();
        if (p_.size() != n) throw std::invalid_argument("skew form: matrix size does not match names");
        for (std::size_t i = 0; i < n; ++i) {
            if (p_[i].size() != n) throw std::invalid_argument("skew form: matrix is not square");
            if (p_[i][i] != 0) throw std::invalid_argument("skew form: nonzero diagonal entry");
            for (std::size_t j = 0; j < n; ++j)
                if (p_[i][j] != -p_[j][i]) throw std::invalid_argument("skew form: matrix is not antisymmetric");
        }
    }

    std::size_t rank() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    long long entry(std::size_t i, std::size_t j) const { return p_[i][j]; }
    const std::vector<std::vector<long long>>& matrix() const { return p_; }

    IntMat integer_matrix() const {
        IntMat m(rank(), std::vector<Integer>(rank()));
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) m[i][j] = Integer(static_cast<long>(p_[i][j]));
        return m;
    }

  private:
    std::vector<std::string> names_;
    std::vector<std::vector<long long>> p_;
};

// Shared phase accumulator: the zeta exponent picked up when x^u x^v is
// brought to ordered form x^{u+v}, i.e. 2 * sum_{i>j} P(i,j) u_i v_j.
// The same routine drives the O_q(SL_2) rewriting (with its own pair form).
inline long long skew_reorder_exponent(const std::vector<std::vector<long long>>& p, const ExpVec& u,
                                       const ExpVec& v) {
    long long acc = 0;
    for (std::size_t i = 1; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < i; ++j) {
            if (v[j] == 0) continue;
            acc += p[i][j] * u[i] * v[j];
        }
    }
    return 2 * acc;
}

class TorusAlgebra;
using TorusPtr = std::shared_ptr<const TorusAlgebra>;

class TorusElement {
  public:
    TorusElement() = default;
    explicit TorusElement(TorusPtr alg) : alg_(std::move(alg)) {}

    const TorusPtr& algebra() const { return alg_; }
    const std::map<ExpVec, ChebPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(ExpVec k, const ChebPoly& coef);

    friend TorusElement operator+(const TorusElement& a, const TorusElement& b) {
        check(a, b);
        TorusElement out = a;
        for (const auto& [k, c] : b.terms_) out.add_term(k, c);
        return out;
    }
    friend TorusElement operator-(const TorusElement& a, const TorusElement& b) {
        check(a, b);
        TorusElement out = a;
        for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
        return out;
    }
    friend TorusElement operator-(const TorusElement& a) {
        TorusElement out(a.alg_);
        for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, -c);
        return out;
    }
    friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
    friend TorusElement operator*(const TorusElement& a, const Cyclotomic& s) {
        TorusElement out(a.alg_);
        for (const auto& [k, c] : a.terms_) out.add_term(k, c * s);
        return out;
    }
    friend TorusElement operator*(const TorusElement& a, const Rational& s) {
        TorusElement out(a.alg_);
        for (const auto& [k, c] : a.terms_) out.add_term(k, c * s);
        return out;
    }
    friend bool operator==(const TorusElement& a, const TorusElement& b) {
        check(a, b);
        return a.terms_ == b.terms_;
    }

    static void check(const TorusElement& a, const TorusElement& b);

  private:
    TorusPtr alg_;
    std::map<ExpVec, ChebPoly> terms_;
};

class TorusAlgebra : public std::enable_shared_from_this<TorusAlgebra> {
  public:
    static TorusPtr make(RootPtr root, SkewForm form, std::size_t punctures = 0) {
        return TorusPtr(new TorusAlgebra(std::move(root), std::move(form), punctures));
    }

    const RootPtr& root() const { return root_; }
    const SkewForm& form() const { return form_; }
    std::size_t rank() const { return form_.rank(); }
    std::size_t punctures() const { return punctures_; }
    unsigned order() const { return root_->order(); }

    TorusElement zero() const { return TorusElement(shared_from_this()); }
    TorusElement one() const { return monomial(ExpVec(rank(), 0)); }
    TorusElement scalar(const Cyclotomic& c) const {
        TorusElement t(shared_from_this());
        t.add_term(ExpVec(rank(), 0), ChebPoly::constant(root_, punctures_, c));
        return t;
    }
    TorusElement monomial(ExpVec k) const {
        TorusElement t(shared_from_this());
        t.add_term(std::move(k), ChebPoly::one(root_, punctures_));
        return t;
    }
    TorusElement monomial(ExpVec k, const ChebPoly& coef) const {
        TorusElement t(shared_from_this());
        t.add_term(std::move(k), coef);
        return t;
    }
    // The basis monomial alpha^a x^k = prod_p T_{a_p}(alpha_p) * x^k.
    TorusElement basis_monomial(const ChebIndex& a, ExpVec k) const {
        return monomial(std::move(k), ChebPoly::basis_element(root_, a));
    }

    long long reorder_exponent(const ExpVec& u, const ExpVec& v) const {
        return skew_reorder_exponent(form_.matrix(), u, v);
    }

    // zeta exponent and exponent vector of x^u * x^v.
    struct MonomialProduct {
        long long zeta_exponent;
        ExpVec exponent;
    };
    MonomialProduct mul_monomial(const ExpVec& u, const ExpVec& v) const {
        if (u.size() != rank() || v.size() != rank()) throw IndexMismatch("exponent length mismatch");
        ExpVec sum(rank());
        for (std::size_t i = 0; i < rank(); ++i) sum[i] = u[i] + v[i];
        return {reorder_exponent(u, v), std::move(sum)};
    }

    // Weyl-ordered monomial [x^k] = zeta^{-sum_{j<l} P(j,l) k_j k_l} x^k;
    // satisfies [x^u][x^v] = zeta^{u^T P v} [x^{u+v}].
    TorusElement weyl_monomial(const ExpVec& k) const {
        long long e = 0;
        for (std::size_t j = 0; j < rank(); ++j)
            for (std::size_t l = j + 1; l < rank(); ++l) e += form_.entry(j, l) * k[j] * k[l];
        return monomial(k) * zeta_power(root_, -e);
    }
    // Same formula evaluated on an explicit generator sequence (repeats allowed).
    TorusElement weyl_word(const std::vector<std::size_t>& seq) const {
        long long e = 0;
        for (std::size_t j = 0; j < seq.size(); ++j)
            for (std::size_t l = j + 1; l < seq.size(); ++l) e += form_.entry(seq[j], seq[l]);
        TorusElement prod = one();
        for (std::size_t g : seq) {
            ExpVec k(rank(), 0);
            k[g] = 1;
            prod = prod * monomial(k);
        }
        return prod * zeta_power(root_, -e);
    }

  private:
    TorusAlgebra(RootPtr root, SkewForm form, std::size_t punctures)
        : root_(std::move(root)), form_(std::move(form)), punctures_(punctures) {}

    RootPtr root_;
    SkewForm form_;
    std::size_t punctures_;
};

inline void TorusElement::add_term(ExpVec k, const ChebPoly& coef) {
    if (!alg_) throw std::invalid_argument("torus element without algebra");
    if (k.size() != alg_->rank()) throw IndexMismatch("exponent length does not match torus rank");
    if (coef.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), coef);
    } else {
        it->second = it->second + coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

inline void TorusElement::check(const TorusElement& a, const TorusElement& b) {
    if (!a.alg_ || !b.alg_) throw std::invalid_argument("uninitialized torus element");
    if (a.alg_->rank() != b.alg_->rank() || a.alg_->order() != b.alg_->order() ||
        a.alg_->punctures() != b.alg_->punctures())
        throw IndexMismatch("torus elements from incompatible algebras");
}

inline TorusElement operator*(const TorusElement& a, const TorusElement& b) {
    TorusElement::check(a, b);
    const auto& alg = *a.alg_;
    TorusElement out(a.alg_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            auto prod = alg.mul_monomial(ka, kb);
            out.add_term(std::move(prod.exponent), (ca * cb) * zeta_power(alg.root(), prod.zeta_exponent));
        }
    return out;
}

// Product in the classical (q = 1) torus: same data, no reordering phases.
inline TorusElement classical_mul(const TorusElement& a, const TorusElement& b) {
    TorusElement::check(a, b);
    TorusElement out(a.algebra());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            ExpVec k(ka.size());
            for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
            out.add_term(std::move(k), ca * cb);
        }
    return out;
}

// Frobenius embedding of the classical torus: x^k -> x^{Nk} and, on the loop
// variables, T_a(alpha_p) -> T_a(T_N(alpha_p)) = T_{aN}(alpha_p). The image
// consists of the monomials with all exponents and Chebyshev indices divisible
// by N, and is central.
inline TorusElement frobenius_lift(const TorusElement& classical) {
    const auto& alg = classical.algebra();
    const unsigned n = alg->order();
    TorusElement out(alg);
    for (const auto& [k, c] : classical.terms()) {
        ExpVec nk(k.size());
        for (std::size_t i = 0; i < k.size(); ++i) nk[i] = k[i] * static_cast<long long>(n);
        out.add_term(std::move(nk), c.index_scale(n));
    }
    return out;
}

using ResidueKey = std::pair<ChebIndex, ExpVec>;

// Unique decomposition t = sum over (a, r) of u_{a,r} * alpha^a x^r with
// a in [0,N)^punctures, r in [0,N)^rank and u_{a,r} in the Frobenius image.
inline std::map<ResidueKey, TorusElement> residue_decompose(const TorusElement& t) {
    const auto& alg = t.algebra();
    const long long n = alg->order();
    std::map<ResidueKey, TorusElement> out;
    for (const auto& [k, coef] : t.terms()) {
        ExpVec low(k.size()), high(k.size());
        for (std::size_t i = 0; i < k.size(); ++i) {
            low[i] = mod_floor(k[i], n);
            high[i] = k[i] - low[i];  // multiple of n; x^k = x^high x^low with trivial phase
        }
        for (auto& [alpha_res, lifted] : coef.residue_split(static_cast<unsigned>(n))) {
            ResidueKey key{alpha_res, low};
            auto it = out.find(key);
            if (it == out.end()) it = out.emplace(key, TorusElement(alg)).first;
            it->second.add_term(high, lifted);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

inline TorusElement reassemble(const std::map<ResidueKey, TorusElement>& parts, const TorusPtr& alg) {
    TorusElement acc(alg);
    for (const auto& [key, coef] : parts)
        acc = acc + coef * alg->basis_monomial(key.first, key.second);
    return acc;
}

// Trace onto the Frobenius image: the projection keeping exactly the monomials
// whose x-exponents and Chebyshev indices are all divisible by N. Equals the
// (0,0) component of the residue decomposition.
inline TorusElement trace_over_frobenius(const TorusElement& t) {
    const auto& alg = t.algebra();
    const long long n = alg->order();
    TorusElement out(alg);
    for (const auto& [k, coef] : t.terms()) {
        bool keep = true;
        for (long long v : k)
            if (mod_floor(v, n) != 0) {
                keep = false;
                break;
            }
        if (!keep) continue;
        ChebPoly kept = coef.filter([&](const ChebIndex& a) {
            for (auto v : a)
                if (v % n != 0) return false;
            return true;
        });
        if (!kept.is_zero()) out.add_term(k, kept);
    }
    return out;
}

inline Lattice central_lattice(const SkewForm& form, unsigned n) {
    return central_lattice_of_matrix(form.integer_matrix(), n);
}
inline Lattice central_lattice(const TorusAlgebra& alg) { return central_lattice(alg.form(), alg.order()); }

inline void require_central(const TorusAlgebra& alg, const Lattice& l) {
    if (l.rank() != alg.rank()) throw LatticeNotCentral("lattice rank does not match torus rank");
    const Integer n(static_cast<long>(alg.order()));
    const auto& p = alg.form().matrix();
    for (std::size_t col = 0; col < l.generators()[0].size(); ++col) {
        for (std::size_t i = 0; i < alg.rank(); ++i) {
            Integer acc(0);
            for (std::size_t j = 0; j < alg.rank(); ++j)
                acc += Integer(static_cast<long>(p[i][j])) * l.generators()[j][col];
            if (acc % n != 0) throw LatticeNotCentral("lattice generator is not central");
        }
    }
    if (!l.contains_scaled_identity(alg.order())) throw LatticeNotCentral("lattice does not contain N*Z^n");
}

// Trace onto the center slice spanned by {alpha^a x^k : k in L}: keeps the
// monomials whose x-exponent lies in L; loop variables pass through.
inline TorusElement trace_over_center(const TorusElement& t, const Lattice& l) {
    const auto& alg = t.algebra();
    require_central(*alg, l);
    TorusElement out(alg);
    for (const auto& [k, coef] : t.terms())
        if (l.member(k)) out.add_term(k, coef);
    return out;
}

// ---------------------------------------------------------------------------
// Coset bases and the brute-force (defining-construction) trace oracle.

class CosetBasis {
  public:
    static CosetBasis make(TorusPtr alg, Lattice lattice,
                           std::optional<std::vector<ExpVec>> reps = std::nullopt) {
        CosetBasis b;
        b.alg_ = std::move(alg);
        require_central(*b.alg_, lattice);
        b.lattice_ = std::move(lattice);
        std::vector<ExpVec> r = reps ? std::move(*reps) : b.lattice_.transversal();
        for (std::size_t i = 0; i < r.size(); ++i) {
            auto canon = b.lattice_.canonical(r[i]);
            if (!b.canon_to_index_.emplace(canon, i).second)
                throw BasisNotClosed("coset basis has two representatives of the same coset");
        }
        if (Integer(static_cast<long>(r.size())) != b.lattice_.index())
            throw BasisNotClosed("coset basis does not cover every coset");
        b.reps_ = std::move(r);
        return b;
    }

    const TorusPtr& algebra() const { return alg_; }
    const Lattice& lattice() const { return lattice_; }
    std::size_t size() const { return reps_.size(); }
    const ExpVec& rep(std::size_t i) const { return reps_[i]; }

    // Index of the representative in the coset of m, plus beta = m - rep in L.
    std::pair<std::size_t, ExpVec> locate(const ExpVec& m) const {
        auto it = canon_to_index_.find(lattice_.canonical(m));
        if (it == canon_to_index_.end()) throw BasisNotClosed("exponent not covered by coset basis");
        ExpVec beta(m.size());
        const ExpVec& r = reps_[it->second];
        for (std::size_t i = 0; i < m.size(); ++i) beta[i] = m[i] - r[i];
        return {it->second, std::move(beta)};
    }

  private:
    TorusPtr alg_;
    Lattice lattice_;
    std::vector<ExpVec> reps_;
    std::map<std::vector<long long>, std::size_t> canon_to_index_;
};

// u = sum_j f_j x^{rep_j} with f_j in the span of {alpha^* x^beta : beta in L}.
inline std::vector<TorusElement> decompose_over_coset_basis(const TorusElement& u, const CosetBasis& basis) {
    const auto& alg = u.algebra();
    std::vector<TorusElement> out(basis.size(), TorusElement(alg));
    for (const auto& [m, coef] : u.terms()) {
        auto [idx, beta] = basis.locate(m);
        // x^m = zeta^{-c} x^beta x^rep with c the reorder exponent
        long long c = alg->reorder_exponent(beta, basis.rep(idx));
        out[idx].add_term(beta, coef * zeta_power(alg->root(), -c));
    }
    return out;
}

inline std::vector<ResidueKey> frobenius_residue_keys(const TorusAlgebra& alg) {
    const long long n = alg.order();
    std::vector<ChebIndex> alphas{ChebIndex(alg.punctures(), 0)};
    for (std::size_t p = 0; p < alg.punctures(); ++p) {
        std::vector<ChebIndex> next;
        for (const auto& a : alphas)
            for (long long v = 0; v < n; ++v) {
                ChebIndex b = a;
                b[p] = static_cast<std::uint32_t>(v);
                next.push_back(std::move(b));
            }
        alphas = std::move(next);
    }
    std::vector<ExpVec> xs{ExpVec(alg.rank(), 0)};
    for (std::size_t i = 0; i < alg.rank(); ++i) {
        std::vector<ExpVec> next;
        for (const auto& e : xs)
            for (long long v = 0; v < n; ++v) {
                ExpVec f = e;
                f[i] = v;
                next.push_back(std::move(f));
            }
        xs = std::move(next);
    }
    std::vector<ResidueKey> keys;
    keys.reserve(alphas.size() * xs.size());
    for (const auto& a : alphas)
        for (const auto& x : xs) keys.emplace_back(a, x);
    return keys;
}

// Defining construction of the trace over the Frobenius image: average of the
// diagonal of left multiplication on the residue basis {alpha^a x^r}. This is
// the only place the 1/k normalization appears.
inline TorusElement brute_force_trace_frobenius(const TorusElement& t) {
    const auto& alg = t.algebra();
    const std::vector<ResidueKey> keys = frobenius_residue_keys(*alg);
    TorusElement acc(alg);
    for (const auto& key : keys) {
        TorusElement u = t * alg->basis_monomial(key.first, key.second);
        auto parts = residue_decompose(u);
        auto it = parts.find(key);
        if (it != parts.end()) acc = acc + it->second;
    }
    return acc * Rational(1, static_cast<long>(keys.size()));
}

// Same construction over a coset basis of the center slice. Only the diagonal
// coefficient of each left multiplication is accumulated, so the cost is one
// locate() per term rather than a full decomposition per basis element.
inline TorusElement brute_force_trace_center(const TorusElement& t, const CosetBasis& basis) {
    const auto& alg = t.algebra();
    TorusElement acc(alg);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        TorusElement u = t * alg->monomial(basis.rep(i));
        for (const auto& [m, coef] : u.terms()) {
            auto [idx, beta] = basis.locate(m);
            if (idx != i) continue;
            long long c = alg->reorder_exponent(beta, basis.rep(idx));
            acc.add_term(beta, coef * zeta_power(alg->root(), -c));
        }
    }
    return acc * Rational(1, static_cast<long>(basis.size()));
}

// ---------------------------------------------------------------------------
// Gram pairing certificates.

enum class PairingKind { frobenius_image, center };

struct GramCertificate {
    PairingKind kind;
    std::size_t x_basis_size = 0;
    bool symmetric = false;
    bool generalized_permutation = false;
    std::vector<std::size_t> matching;  // row i of the x-part pairs with column matching[i]
    int permutation_sign = 1;
    TorusElement monomial_determinant;  // x-part: sign * product of matched entries
    // Frobenius pairing only: per puncture, determinants of the 1x1/2x2
    // Chebyshev pair blocks (a with N-a); all must be nonzero.
    std::vector<std::vector<ChebSeries>> alpha_block_determinants;
    bool nondegenerate = false;
};

inline GramCertificate gram_certificate(const TorusPtr& alg, PairingKind kind,
                                        std::optional<Lattice> center = std::nullopt) {
    const unsigned n = alg->order();
    GramCertificate cert;
    cert.kind = kind;

    Lattice lattice = kind == PairingKind::center
                          ? (center ? std::move(*center) : central_lattice(*alg))
                          : Lattice::make(alg->rank(), [&] {
                                IntMat m(alg->rank(), std::vector<Integer>(alg->rank(), Integer(0)));
                                for (std::size_t i = 0; i < alg->rank(); ++i) m[i][i] = n;
                                return m;
                            }());
    if (kind == PairingKind::center) require_central(*alg, lattice);

    std::vector<ExpVec> reps = lattice.transversal();
    const std::size_t m = reps.size();
    cert.x_basis_size = m;
    cert.matching.assign(m, m);

    // x-part Gram: G_ij = trace(x^{r_i} x^{r_j}), nonzero iff r_i + r_j in L.
    std::vector<std::vector<TorusElement>> gram(m);
    for (std::size_t i = 0; i < m; ++i) {
        gram[i].assign(m, alg->zero());
        std::size_t hits = 0;
        for (std::size_t j = 0; j < m; ++j) {
            auto prod = alg->mul_monomial(reps[i], reps[j]);
            if (!lattice.member(prod.exponent)) continue;
            gram[i][j] =
                alg->monomial(prod.exponent) * zeta_power(alg->root(), prod.zeta_exponent);
            cert.matching[i] = j;
            ++hits;
        }
        if (hits != 1) {
            cert.generalized_permutation = false;
            throw DegeneratePairing("gram row does not have exactly one nonzero entry");
        }
    }
    cert.generalized_permutation = true;

    cert.symmetric = true;
    for (std::size_t i = 0; i < m && cert.symmetric; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (!(gram[i][j] == gram[j][i])) {
                cert.symmetric = false;
                break;
            }

    // permutation sign by cycle decomposition
    {
        std::vector<bool> seen(m, false);
        int sign = 1;
        for (std::size_t i = 0; i < m; ++i) {
            if (seen[i]) continue;
            std::size_t len = 0, j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = cert.matching[j];
                ++len;
            }
            if (len % 2 == 0) sign = -sign;
        }
        cert.permutation_sign = sign;
    }

    TorusElement det = alg->one();
    for (std::size_t i = 0; i < m; ++i) det = det * gram[i][cert.matching[i]];
    if (cert.permutation_sign < 0) det = -det;
    cert.monomial_determinant = det;
    bool ok = !det.is_zero();

    if (kind == PairingKind::frobenius_image && alg->punctures() > 0) {
        // per-puncture Chebyshev block: B_ab = N-filtered part of T_a T_b.
        // Rows pair up as {0} and {a, N-a}; the determinant is the product of
        // the 1x1 and 2x2 block determinants.
        for (std::size_t p = 0; p < alg->punctures(); ++p) {
            auto filtered = [&](unsigned a, unsigned b) {
                ChebSeries s = cheb_mul(ChebSeries{{a, Rational(1)}}, ChebSeries{{b, Rational(1)}});
                ChebSeries kept;
                for (const auto& [idx, c] : s)
                    if (idx % n == 0) kept.emplace(idx, c);
                return kept;
            };
            std::vector<ChebSeries> blocks;
            blocks.push_back(filtered(0, 0));
            for (unsigned a = 1; 2 * a < n; ++a) {
                ChebSeries diag1 = filtered(a, a);
                ChebSeries diag2 = filtered(n - a, n - a);
                ChebSeries off = filtered(a, n - a);
                ChebSeries d = cheb_mul(diag1, diag2);
                for (const auto& [idx, c] : cheb_mul(off, off)) cheb_add_term(d, idx, -c);
                blocks.push_back(std::move(d));
            }
            for (const auto& b : blocks)
                if (b.empty()) ok = false;
            cert.alpha_block_determinants.push_back(std::move(blocks));
        }
    }

    cert.nondegenerate = ok;
    if (!ok) throw DegeneratePairing("gram determinant vanishes");
    return cert;
}

// ---------------------------------------------------------------------------
// Division witnesses over the fraction field of the Frobenius image.

struct DivisionWitness {
    std::vector<ExpVec> residues;          // basis exponents r in [0,N)^n
    std::vector<LaurentFraction> coords;   // s = sum_j coords[j] x^{r_j}
};

namespace detail {

inline Cyclotomic cheb_scalar(const ChebPoly& c) {
    if (c.nvars() != 0) throw IndexMismatch("expected a puncture-free coefficient");
    if (c.is_zero()) return Cyclotomic(c.root());
    return c.terms().begin()->second;
}

// residue-indexed product of a polynomial torus element with a witness; the
// returned coordinates are over the fraction field of C[x^{+-N}].
inline std::vector<LaurentFraction> witness_product(const TorusElement& t, const DivisionWitness& w,
                                                    bool witness_on_right) {
    const auto& alg = t.algebra();
    const long long n = alg->order();
    const std::size_t nv = alg->rank();
    LaurentPoly zero_poly = LaurentPoly::zero(alg->root(), nv);
    std::vector<LaurentFraction> acc(w.residues.size(), LaurentFraction(zero_poly));
    std::map<std::vector<long long>, std::size_t> index;
    for (std::size_t j = 0; j < w.residues.size(); ++j) index[w.residues[j]] = j;

    for (const auto& [m, coef] : t.terms()) {
        Cyclotomic c = cheb_scalar(coef);
        for (std::size_t j = 0; j < w.residues.size(); ++j) {
            if (w.coords[j].is_zero()) continue;
            const ExpVec& r = w.residues[j];
            long long phase = witness_on_right ? alg->reorder_exponent(m, r) : alg->reorder_exponent(r, m);
            ExpVec total(nv);
            for (std::size_t i = 0; i < nv; ++i) total[i] = m[i] + r[i];
            ExpVec low(nv), high(nv);
            for (std::size_t i = 0; i < nv; ++i) {
                low[i] = mod_floor(total[i], n);
                high[i] = (total[i] - low[i]) / n;
            }
            auto it = index.find(low);
            if (it == index.end()) throw BasisNotClosed("residue missing from witness basis");
            LaurentPoly mono =
                LaurentPoly::monomial(alg->root(), high, c * zeta_power(alg->root(), phase));
            acc[it->second] = acc[it->second] + w.coords[j] * LaurentFraction(mono);
        }
    }
    return acc;
}

}  // namespace detail

// Inverse of t over the fraction field of the Frobenius image, obtained by
// solving the left-multiplication system on the residue basis and verified by
// recomputing t*s and s*t from scratch.
inline DivisionWitness division_witness(const TorusElement& t) {
    const auto& alg = t.algebra();
    if (alg->punctures() != 0) throw IndexMismatch("division witnesses require a puncture-free torus");
    if (t.is_zero()) throw NotInvertible("zero element has no inverse");
    const long long n = alg->order();
    const std::size_t nv = alg->rank();

    std::vector<ExpVec> residues{ExpVec(nv, 0)};
    for (std::size_t i = 0; i < nv; ++i) {
        std::vector<ExpVec> next;
        for (const auto& e : residues)
            for (long long v = 0; v < n; ++v) {
                ExpVec f = e;
                f[i] = v;
                next.push_back(std::move(f));
            }
        residues = std::move(next);
    }
    std::map<std::vector<long long>, std::size_t> index;
    for (std::size_t j = 0; j < residues.size(); ++j) index[residues[j]] = j;
    const std::size_t m = residues.size();

    // f[i][j]: t * x^{r_i} = sum_j f[i][j] x^{r_j}, coefficients in C[x^{+-N}]
    LaurentPoly zero_poly = LaurentPoly::zero(alg->root(), nv);
    Matrix<LaurentPoly> a(m, m, zero_poly);
    for (std::size_t i = 0; i < m; ++i) {
        TorusElement u = t * alg->monomial(residues[i]);
        for (const auto& [mm, coef] : u.terms()) {
            ExpVec low(nv), high(nv);
            for (std::size_t k = 0; k < nv; ++k) {
                low[k] = mod_floor(mm[k], n);
                high[k] = (mm[k] - low[k]) / n;
            }
            std::size_t j = index.at(low);
            LaurentPoly mono = LaurentPoly::monomial(alg->root(), high, detail::cheb_scalar(coef));
            // system is indexed as A[row=j][col=i] (transpose of f)
            a.at(j, i) = a.at(j, i) + mono;
        }
    }
    // Cramer over the polynomial ring: fraction-free determinants avoid the
    // blowup of unreduced fraction elimination.
    LaurentPoly det = bareiss_determinant(a);
    if (det.is_zero()) throw NotInvertible("left multiplication matrix is singular");
    std::vector<LaurentFraction> coords;
    coords.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        Matrix<LaurentPoly> aj = a;
        for (std::size_t i = 0; i < m; ++i)
            aj.at(i, j) = (i == 0) ? zero_poly.one_like() : zero_poly;
        coords.emplace_back(bareiss_determinant(aj), det);
    }

    DivisionWitness w{std::move(residues), std::move(coords)};

    // independent verification of both products
    auto check_unit = [&](const std::vector<LaurentFraction>& res) {
        for (std::size_t j = 0; j < res.size(); ++j) {
            const bool want_one = (j == 0);
            if (want_one) {
                if (!(res[j] == LaurentFraction(zero_poly.one_like())))
                    throw NotInvertible("witness product is not the unit");
            } else if (!res[j].is_zero()) {
                throw NotInvertible("witness product has spurious component");
            }
        }
    };
    check_unit(detail::witness_product(t, w, true));
    check_unit(detail::witness_product(t, w, false));
    return w;
}

inline std::string torus_to_string(const TorusElement& t) {
    if (t.is_zero()) return "0";
    const auto& names = t.algebra()->form().names();
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, coef] : t.terms()) {
        if (!first) os << "  +  ";
        first = false;
        bool first_cheb = true;
        os << "[";
        for (const auto& [a, c] : coef.terms()) {
            if (!first_cheb) os << " + ";
            first_cheb = false;
            os << "(" << c.to_string() << ")";
            for (std::size_t p = 0; p < a.size(); ++p)
                if (a[p] != 0) os << "*T" << a[p] << "(alpha" << p << ")";
        }
        os << "]";
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            os << "*" << (i < names.size() ? names[i] : "x" + std::to_string(i));
            if (k[i] != 1) os << "^" << k[i];
        }
    }
    return os.str();
}

}  // namespace qtrace
