#pragma once

// Commutative multivariate Laurent polynomials over a cyclotomic field. Used
// as the coefficient ring "polynomials in the N-th powers" when torus elements
// are decomposed over a residue basis, and as the ring under the fraction
// field in division witnesses.

#include <qtrace/cyclotomic.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qtrace {

using ExpVec = std::vector<long long>;

struct InexactDivision : std::runtime_error {
    explicit InexactDivision(const std::string& what) : std::runtime_error(what) {}
};

class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(RootPtr root, std::size_t nvars) : root_(std::move(root)), nvars_(nvars) {}

    static LaurentPoly zero(RootPtr root, std::size_t nvars) { return LaurentPoly(std::move(root), nvars); }
    static LaurentPoly constant(RootPtr root, std::size_t nvars, const Cyclotomic& c) {
        LaurentPoly out(std::move(root), nvars);
        out.add_term(ExpVec(nvars, 0), c);
        return out;
    }
    static LaurentPoly monomial(RootPtr root, ExpVec e, const Cyclotomic& c) {
        LaurentPoly out(std::move(root), e.size());
        out.add_term(std::move(e), c);
        return out;
    }

    const RootPtr& root() const { return root_; }
    std::size_t nvars() const { return nvars_; }
    const std::map<ExpVec, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == ExpVec(nvars_, 0) &&
               terms_.begin()->second.is_one();
    }

    LaurentPoly zero_like() const { return LaurentPoly(root_, nvars_); }
    LaurentPoly one_like() const { return constant(root_, nvars_, Cyclotomic(root_, Rational(1))); }

    void add_term(ExpVec e, const Cyclotomic& c) {
        if (e.size() != nvars_) throw std::invalid_argument("laurent exponent of wrong length");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        check(a, b);
        LaurentPoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        check(a, b);
        LaurentPoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
        return out;
    }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly out(a.root_, a.nvars_);
        for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
        return out;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        check(a, b);
        LaurentPoly out(a.root_, a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e(a.nvars_);
                for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const Cyclotomic& s) {
        LaurentPoly out(a.root_, a.nvars_);
        for (const auto& [e, c] : a.terms_) out.add_term(e, c * s);
        return out;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        check(a, b);
        return a.terms_ == b.terms_;
    }

    // Exact quotient a / b, for use inside fraction-free elimination where the
    // divisibility is guaranteed. Repeatedly cancels the lexicographically
    // leading term of the remainder against the leading term of b; when a is a
    // multiple of b this takes one pass per quotient term. A non-multiple is
    // detected via the support bound: extremal terms of a product cannot fully
    // cancel over a field, so an exact quotient's exponents lie coordinate-wise
    // in [min(a)-min(b), max(a)-max(b)].
    friend LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b) {
        check(a, b);
        if (b.is_zero()) throw InexactDivision("laurent division by zero");
        LaurentPoly quot(a.root_, a.nvars_);
        if (a.is_zero()) return quot;
        unsigned long long max_steps = 1;
        {
            ExpVec amin = a.min_exponents(), amax = a.max_exponents();
            ExpVec bmin = b.min_exponents(), bmax = b.max_exponents();
            for (std::size_t i = 0; i < a.nvars_; ++i) {
                long long width = (amax[i] - bmax[i]) - (amin[i] - bmin[i]);
                if (width < 0) throw InexactDivision("laurent division is not exact");
                max_steps *= static_cast<unsigned long long>(width) + 1;
                if (max_steps > (1ull << 24)) max_steps = 1ull << 24;
            }
        }
        const auto& lead_b = *b.terms_.rbegin();
        LaurentPoly rem = a;
        unsigned long long steps = 0;
        while (!rem.is_zero()) {
            if (++steps > max_steps) throw InexactDivision("laurent division is not exact");
            const auto& lead_r = *rem.terms_.rbegin();
            ExpVec e(a.nvars_);
            for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = lead_r.first[i] - lead_b.first[i];
            LaurentPoly term = monomial(a.root_, std::move(e), lead_r.second / lead_b.second);
            quot = quot + term;
            rem = rem - term * b;
        }
        return quot;
    }

    // Divide by the unit  content * x^shift  (exact for any Laurent polynomial).
    void divide_unit(const Rational& content, const ExpVec& shift) {
        std::map<ExpVec, Cyclotomic> next;
        Rational inv = Rational(1) / content;
        for (const auto& [e, c] : terms_) {
            ExpVec e2(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e2[i] = e[i] - shift[i];
            next.emplace(std::move(e2), c * inv);
        }
        terms_ = std::move(next);
    }

    // Positive rational content: gcd of numerators / lcm of denominators over
    // every rational coordinate of every coefficient. Zero polynomial -> 1.
    Rational content() const {
        Integer g(0), l(1);
        for (const auto& [e, c] : terms_)
            for (const auto& r : c.coefficients()) {
                if (r == 0) continue;
                Integer num = abs(r.get_num());
                Integer den = r.get_den();
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
            }
        if (g == 0) return Rational(1);
        Rational out(g, l);
        out.canonicalize();
        return out;
    }
    ExpVec min_exponents() const {
        ExpVec m(nvars_, 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) {
                m = e;
                first = false;
            } else {
                for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
            }
        }
        return m;
    }
    ExpVec max_exponents() const {
        ExpVec m(nvars_, 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) {
                m = e;
                first = false;
            } else {
                for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::max(m[i], e[i]);
            }
        }
        return m;
    }

    std::string to_string(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            os << "(" << c.to_string() << ")";
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                os << "*" << (i < names.size() ? names[i] : "y" + std::to_string(i));
                if (e[i] != 1) os << "^" << e[i];
            }
            first = false;
        }
        return os.str();
    }

    static void check(const LaurentPoly& a, const LaurentPoly& b) {
        if (!a.root_ || !b.root_) throw FieldMismatch("uninitialized laurent polynomial");
        if (a.root_->order() != b.root_->order())
            throw FieldMismatch("laurent polynomials over different root orders");
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("laurent polynomials in different variable counts");
    }

  private:
    RootPtr root_;
    std::size_t nvars_ = 0;
    std::map<ExpVec, Cyclotomic> terms_;
};

}  // namespace qtrace
