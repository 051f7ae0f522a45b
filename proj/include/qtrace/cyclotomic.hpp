#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta), zeta a primitive N-th root
// of unity for odd N >= 3. Elements are rational coefficient vectors of length
// phi(N), reduced modulo the N-th cyclotomic polynomial; equality of reduced
// vectors is equality in the field.
//
// Convention used throughout the library: zeta plays the role of q^{1/2}, so
// q = zeta^2. Since N is odd, q is itself a primitive N-th root of unity and
// every half-integer power of q is a genuine zeta power.

#include <qtrace/poly.hpp>
#include <qtrace/rational.hpp>

#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtrace {

struct FieldMismatch : std::runtime_error {
    explicit FieldMismatch(const std::string& what) : std::runtime_error(what) {}
};

class RootData {
  public:
    static std::shared_ptr<const RootData> make(unsigned order) {
        if (order < 3 || order % 2 == 0)
            throw std::invalid_argument("root order must be odd and >= 3");
        return std::shared_ptr<const RootData>(new RootData(order));
    }

    unsigned order() const { return n_; }
    unsigned degree() const { return phi_; }
    const RatPoly& minimal_polynomial() const { return min_poly_; }

    // x^j reduced modulo the minimal polynomial, for 0 <= j <= 2*phi-2.
    const std::vector<Rational>& power_residue(std::size_t j) const { return power_table_[j]; }

  private:
    explicit RootData(unsigned order) : n_(order), min_poly_(cyclotomic_polynomial(order)) {
        phi_ = static_cast<unsigned>(min_poly_.degree());
        power_table_.resize(2 * phi_ - 1);
        for (unsigned j = 0; j < phi_; ++j) {
            power_table_[j].assign(phi_, Rational(0));
            power_table_[j][j] = 1;
        }
        // x^j = x * x^{j-1} reduced: shift up then fold the overflow term
        // through x^phi = -(lower coefficients of the minimal polynomial).
        for (std::size_t j = phi_; j < power_table_.size(); ++j) {
            std::vector<Rational> v(phi_, Rational(0));
            const std::vector<Rational>& prev = power_table_[j - 1];
            for (unsigned i = 0; i + 1 < phi_; ++i) v[i + 1] = prev[i];
            const Rational& top = prev[phi_ - 1];
            if (top != 0)
                for (unsigned i = 0; i < phi_; ++i) v[i] -= top * min_poly_[i];
            power_table_[j] = std::move(v);
        }
    }

    unsigned n_;
    unsigned phi_;
    RatPoly min_poly_;
    std::vector<std::vector<Rational>> power_table_;
};

using RootPtr = std::shared_ptr<const RootData>;

class Cyclotomic {
  public:
    Cyclotomic() = default;
    explicit Cyclotomic(RootPtr root) : root_(std::move(root)) {
        coeff_.assign(root_->degree(), Rational(0));
    }
    Cyclotomic(RootPtr root, Rational constant) : Cyclotomic(std::move(root)) {
        coeff_[0] = std::move(constant);
    }
    // Coefficients in ascending zeta powers; longer vectors are reduced.
    Cyclotomic(RootPtr root, const std::vector<Rational>& raw) : Cyclotomic(root) {
        const unsigned phi = root_->degree();
        for (std::size_t j = 0; j < raw.size(); ++j) {
            if (raw[j] == 0) continue;
            if (j < phi) {
                coeff_[j] += raw[j];
            } else {
                // reduce zeta^j for j beyond the table by splitting the power
                std::size_t rem = j;
                Cyclotomic factor = Cyclotomic(root_, raw[j]);
                while (rem >= phi) {
                    factor = factor * zeta_power_impl(root_, phi);
                    rem -= phi;
                }
                factor = factor * zeta_power_impl(root_, rem);
                for (unsigned i = 0; i < phi; ++i) coeff_[i] += factor.coeff_[i];
            }
        }
    }

    const RootPtr& root() const { return root_; }
    const std::vector<Rational>& coefficients() const { return coeff_; }

    bool is_zero() const {
        for (const auto& c : coeff_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < coeff_.size(); ++i)
            if (coeff_[i] != 0) return false;
        return true;
    }
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
        return coeff_[0];
    }
    bool is_one() const { return is_rational() && coeff_[0] == 1; }

    Cyclotomic zero_like() const { return Cyclotomic(root_); }
    Cyclotomic one_like() const { return Cyclotomic(root_, Rational(1)); }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        Cyclotomic out(a.root_);
        for (std::size_t i = 0; i < out.coeff_.size(); ++i) out.coeff_[i] = a.coeff_[i] + b.coeff_[i];
        return out;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        Cyclotomic out(a.root_);
        for (std::size_t i = 0; i < out.coeff_.size(); ++i) out.coeff_[i] = a.coeff_[i] - b.coeff_[i];
        return out;
    }
    friend Cyclotomic operator-(const Cyclotomic& a) {
        Cyclotomic out(a.root_);
        for (std::size_t i = 0; i < out.coeff_.size(); ++i) out.coeff_[i] = -a.coeff_[i];
        return out;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        const unsigned phi = a.root_->degree();
        std::vector<Rational> prod(2 * phi - 1, Rational(0));
        for (unsigned i = 0; i < phi; ++i) {
            if (a.coeff_[i] == 0) continue;
            for (unsigned j = 0; j < phi; ++j) {
                if (b.coeff_[j] == 0) continue;
                prod[i + j] += a.coeff_[i] * b.coeff_[j];
            }
        }
        Cyclotomic out(a.root_);
        for (std::size_t j = 0; j < prod.size(); ++j) {
            if (prod[j] == 0) continue;
            const std::vector<Rational>& red = a.root_->power_residue(j);
            for (unsigned i = 0; i < phi; ++i) out.coeff_[i] += prod[j] * red[i];
        }
        return out;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Rational& s) {
        Cyclotomic out(a.root_);
        for (std::size_t i = 0; i < out.coeff_.size(); ++i) out.coeff_[i] = a.coeff_[i] * s;
        return out;
    }
    friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a) { return a * s; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        check_same(a, b);
        return a.coeff_ == b.coeff_;
    }

    // Inverse via the extended euclidean algorithm in Q[x]; the minimal
    // polynomial is irreducible, so every nonzero element is invertible.
    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero cyclotomic value");
        RatPoly self{coefficients()};
        ExtGcd e = ext_gcd(self, root_->minimal_polynomial());
        if (e.g.degree() != 0) throw std::logic_error("cyclotomic inverse: gcd not constant");
        std::vector<Rational> raw = e.u.coefficients();
        return Cyclotomic(root_, raw);
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeff_.size(); ++i) {
            if (coeff_[i] == 0) continue;
            if (!first) os << " + ";
            os << rational_to_string(coeff_[i]);
            if (i == 1) os << "*z";
            if (i > 1) os << "*z^" << i;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

    static void check_same(const Cyclotomic& a, const Cyclotomic& b) {
        if (!a.root_ || !b.root_) throw FieldMismatch("uninitialized cyclotomic operand");
        if (a.root_->order() != b.root_->order())
            throw FieldMismatch("cyclotomic operands over different root orders");
    }

  private:
    static Cyclotomic zeta_power_impl(const RootPtr& root, long long m) {
        const unsigned n = root->order();
        long long r = m % static_cast<long long>(n);
        if (r < 0) r += n;
        Cyclotomic out(root);
        if (static_cast<unsigned>(r) < root->degree()) {
            out.coeff_[static_cast<std::size_t>(r)] = 1;
            return out;
        }
        // r in [phi, N): peel one factor at a time through the table.
        out.coeff_[0] = 1;
        long long rem = r;
        const unsigned phi = root->degree();
        while (rem > 0) {
            long long step = std::min<long long>(rem, phi);
            Cyclotomic p(root);
            const std::vector<Rational>& red = root->power_residue(static_cast<std::size_t>(step));
            p.coeff_ = red;
            out = out * p;
            rem -= step;
        }
        return out;
    }

    friend Cyclotomic zeta_power(const RootPtr& root, long long m);

    RootPtr root_;
    std::vector<Rational> coeff_;
};

// zeta^m, any integer m (reduced modulo the root order).
inline Cyclotomic zeta_power(const RootPtr& root, long long m) {
    return Cyclotomic::zeta_power_impl(root, m);
}

// q^m = zeta^{2m}; q^{m/2} for odd numerators is zeta^m.
inline Cyclotomic q_power(const RootPtr& root, long long m) { return zeta_power(root, 2 * m); }

}  // namespace qtrace
