#pragma once

// Polynomials in finitely many commuting variables alpha_p, stored in the
// product Chebyshev basis: a term maps a multi-index a to a scalar and means
//   coef(a) * prod_p T_{a(p)}(alpha_p),
// the product running over all variables (index 0 contributes a factor
// T_0 = 2). The Chebyshev product rule keeps multiplication uniform:
//   T_a T_b = T_{a+b} + T_{|a-b|}.

#include <qtrace/chebyshev.hpp>
#include <qtrace/cyclotomic.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace qtrace {

struct IndexMismatch : std::runtime_error {
    explicit IndexMismatch(const std::string& what) : std::runtime_error(what) {}
};

using ChebIndex = std::vector<std::uint32_t>;

class ChebPoly {
  public:
    ChebPoly() = default;
    ChebPoly(RootPtr root, std::size_t nvars) : root_(std::move(root)), nvars_(nvars) {}

    static ChebPoly zero(RootPtr root, std::size_t nvars) { return ChebPoly(std::move(root), nvars); }
    static ChebPoly constant(RootPtr root, std::size_t nvars, const Cyclotomic& c) {
        // c = c * prod_p (T_0/2)
        ChebPoly out(root, nvars);
        Cyclotomic scaled = c * rational_pow(Rational(1, 2), static_cast<long>(nvars));
        out.add_term(ChebIndex(nvars, 0), scaled);
        return out;
    }
    static ChebPoly one(RootPtr root, std::size_t nvars) {
        Cyclotomic c(root, Rational(1));
        return constant(std::move(root), nvars, c);
    }
    // The basis monomial prod_p T_{a(p)}(alpha_p) itself.
    static ChebPoly basis_element(RootPtr root, ChebIndex a) {
        ChebPoly out(root, a.size());
        Cyclotomic c(out.root_, Rational(1));
        out.add_term(std::move(a), c);
        return out;
    }
    // (alpha_p)^m, expanded into the Chebyshev basis.
    static ChebPoly variable_power(RootPtr root, std::size_t nvars, std::size_t p, unsigned m) {
        if (p >= nvars) throw IndexMismatch("variable index out of range");
        ChebPoly out(root, nvars);
        const Rational pad = rational_pow(Rational(1, 2), static_cast<long>(nvars) - 1);
        for (const auto& [k, c] : chebyshev_expand(RatPoly::monomial(m))) {
            ChebIndex idx(nvars, 0);
            idx[p] = k;
            out.add_term(std::move(idx), Cyclotomic(out.root_, c * pad));
        }
        return out;
    }

    const RootPtr& root() const { return root_; }
    std::size_t nvars() const { return nvars_; }
    const std::map<ChebIndex, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(ChebIndex idx, const Cyclotomic& c) {
        if (idx.size() != nvars_) throw IndexMismatch("chebyshev multi-index of wrong length");
        if (c.is_zero()) return;
        auto it = terms_.find(idx);
        if (it == terms_.end()) {
            terms_.emplace(std::move(idx), c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend ChebPoly operator+(const ChebPoly& a, const ChebPoly& b) {
        check_compatible(a, b);
        ChebPoly out = a;
        for (const auto& [idx, c] : b.terms_) out.add_term(idx, c);
        return out;
    }
    friend ChebPoly operator-(const ChebPoly& a, const ChebPoly& b) {
        check_compatible(a, b);
        ChebPoly out = a;
        for (const auto& [idx, c] : b.terms_) out.add_term(idx, -c);
        return out;
    }
    friend ChebPoly operator-(const ChebPoly& a) {
        ChebPoly out(a.root_, a.nvars_);
        for (const auto& [idx, c] : a.terms_) out.terms_.emplace(idx, -c);
        return out;
    }
    friend ChebPoly operator*(const ChebPoly& a, const Cyclotomic& s) {
        ChebPoly out(a.root_, a.nvars_);
        if (s.is_zero()) return out;
        for (const auto& [idx, c] : a.terms_) out.add_term(idx, c * s);
        return out;
    }
    friend ChebPoly operator*(const ChebPoly& a, const Rational& s) {
        ChebPoly out(a.root_, a.nvars_);
        if (s == 0) return out;
        for (const auto& [idx, c] : a.terms_) out.add_term(idx, c * s);
        return out;
    }
    friend ChebPoly operator*(const ChebPoly& a, const ChebPoly& b) {
        check_compatible(a, b);
        ChebPoly out(a.root_, a.nvars_);
        for (const auto& [ia, ca] : a.terms_)
            for (const auto& [ib, cb] : b.terms_) {
                Cyclotomic c = ca * cb;
                // expand prod_p (T_{ia_p + ib_p} + T_{|ia_p - ib_p|})
                ChebIndex idx(a.nvars_, 0);
                expand_product(out, ia, ib, idx, 0, c);
            }
        return out;
    }
    friend bool operator==(const ChebPoly& a, const ChebPoly& b) {
        check_compatible(a, b);
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ita = a.terms_.begin();
        auto itb = b.terms_.begin();
        for (; ita != a.terms_.end(); ++ita, ++itb)
            if (ita->first != itb->first || !(ita->second == itb->second)) return false;
        return true;
    }

    template <typename Pred>
    ChebPoly filter(Pred&& keep) const {
        ChebPoly out(root_, nvars_);
        for (const auto& [idx, c] : terms_)
            if (keep(idx)) out.terms_.emplace(idx, c);
        return out;
    }

    // Indices scaled by n: the image under T_a(alpha) -> T_a(T_n(alpha)) = T_{an}(alpha).
    ChebPoly index_scale(unsigned n) const {
        ChebPoly out(root_, nvars_);
        for (const auto& [idx, c] : terms_) {
            ChebIndex scaled(idx);
            for (auto& v : scaled) v *= n;
            out.terms_.emplace(std::move(scaled), c);
        }
        return out;
    }

    // Decomposition over the residue basis {prod_p T_{r_p} : r in [0,n)^vars}
    // with coefficients supported on index multiples of n:
    //   this = sum_r coef_r * prod_p T_{r_p}.
    std::map<ChebIndex, ChebPoly> residue_split(unsigned n) const {
        std::map<ChebIndex, ChebPoly> out;
        for (const auto& [idx, c] : terms_) {
            // tensor the per-variable splits together, one variable at a time:
            // each branch carries (residue prefix, lifted-index prefix, rational weight)
            struct Branch {
                ChebIndex residue, lifted;
                Rational weight;
            };
            std::vector<Branch> branches{{ChebIndex{}, ChebIndex{}, Rational(1)}};
            for (std::size_t p = 0; p < nvars_; ++p) {
                std::vector<Branch> next;
                const auto& split = frobenius_split(idx[p], n);
                for (const auto& br : branches)
                    for (const auto& [r, series] : split)
                        for (const auto& [jn, rat] : series) {
                            Branch nb = br;
                            nb.residue.push_back(r);
                            nb.lifted.push_back(jn);
                            nb.weight *= rat;
                            if (nb.weight != 0) next.push_back(std::move(nb));
                        }
                branches = std::move(next);
            }
            for (const auto& br : branches) {
                auto it = out.find(br.residue);
                if (it == out.end()) it = out.emplace(br.residue, ChebPoly(root_, nvars_)).first;
                it->second.add_term(br.lifted, c * br.weight);
            }
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    }

    static void check_compatible(const ChebPoly& a, const ChebPoly& b) {
        if (!a.root_ || !b.root_) throw FieldMismatch("uninitialized chebyshev polynomial");
        if (a.root_->order() != b.root_->order())
            throw FieldMismatch("chebyshev polynomials over different root orders");
        if (a.nvars_ != b.nvars_) throw IndexMismatch("chebyshev polynomials in different variable counts");
    }

  private:
    static void expand_product(ChebPoly& out, const ChebIndex& ia, const ChebIndex& ib, ChebIndex& idx,
                               std::size_t p, const Cyclotomic& c) {
        if (p == ia.size()) {
            out.add_term(idx, c);
            return;
        }
        const std::uint32_t s = ia[p] + ib[p];
        const std::uint32_t d = ia[p] > ib[p] ? ia[p] - ib[p] : ib[p] - ia[p];
        idx[p] = s;
        expand_product(out, ia, ib, idx, p + 1, c);
        idx[p] = d;
        expand_product(out, ia, ib, idx, p + 1, c);
    }

    RootPtr root_;
    std::size_t nvars_ = 0;
    std::map<ChebIndex, Cyclotomic> terms_;
};

}  // namespace qtrace
