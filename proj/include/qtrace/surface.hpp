#pragma once

// Combinatorics of punctured bordered surfaces: Euler characteristic, the rank
// invariant r, the doubled-arc index layout, the set of evenly punctured
// boundary circles, the alternating-pattern subgroup of Z^{arcs}, and the
// expected dimension counts.

#include <qtrace/lattice.hpp>
#include <qtrace/qtorus.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace qtrace {

struct UnsupportedSurface : std::runtime_error {
    explicit UnsupportedSurface(const std::string& what) : std::runtime_error(what) {}
};

// Compact oriented surface of genus g minus finitely many punctures; each
// boundary circle of the compactification carries at least one puncture.
class PbSurface {
  public:
    PbSurface(unsigned genus, std::vector<unsigned> boundary_punctures, unsigned interior_punctures)
        : genus_(genus), boundary_(std::move(boundary_punctures)), interior_(interior_punctures) {
        if (boundary_.empty()) throw std::invalid_argument("surface must have nonempty boundary");
        for (unsigned t : boundary_)
            if (t == 0) throw std::invalid_argument("every boundary circle must carry a puncture");
    }

    unsigned genus() const { return genus_; }
    const std::vector<unsigned>& boundary_punctures() const { return boundary_; }
    unsigned interior_punctures() const { return interior_; }
    std::size_t circles() const { return boundary_.size(); }

    long long euler_char() const {
        return (2 - 2 * static_cast<long long>(genus_) - static_cast<long long>(circles())) -
               static_cast<long long>(interior_);
    }

    // r = -chi + (number of boundary components of the open surface); each
    // circle with k punctures contributes k open boundary arcs.
    long long r_invariant() const {
        long long total = 0;
        for (unsigned t : boundary_) total += t;
        return -euler_char() + total;
    }

    bool is_monogon() const {
        return genus_ == 0 && interior_ == 0 && boundary_.size() == 1 && boundary_[0] == 1;
    }
    bool is_bigon() const {
        return genus_ == 0 && interior_ == 0 && boundary_.size() == 1 && boundary_[0] == 2;
    }

    std::size_t tau_bar_size() const {
        if (is_monogon()) throw UnsupportedSurface("monogon has no quasitriangulation arc basis");
        if (is_bigon()) throw UnsupportedSurface("bigon is handled by its own coordinate algebra");
        long long s = 3 * r_invariant() - static_cast<long long>(interior_);
        if (s < 0) throw UnsupportedSurface("arc count would be negative");
        return static_cast<std::size_t>(s);
    }

    // Positions (into boundary_punctures) of the evenly punctured circles.
    std::vector<std::size_t> lambda_circles() const {
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < boundary_.size(); ++c)
            if (boundary_[c] % 2 == 0) out.push_back(c);
        return out;
    }

  private:
    unsigned genus_;
    std::vector<unsigned> boundary_;
    unsigned interior_;
};

// Index layout of the extended arc set: the doubled boundary arcs come first,
// circle by circle in input order and in cyclic order within a circle; the
// remaining arcs follow. Only the evenly punctured circles take part in the
// alternating-pattern subgroup.
struct TauBarLayout {
    std::size_t size = 0;
    std::vector<std::vector<std::size_t>> circle_arcs;   // per circle: its doubled-arc indices
    std::vector<std::size_t> lambda_circles;             // positions into circle_arcs
    std::vector<std::string> arc_names;

    static TauBarLayout standard(const PbSurface& s) {
        TauBarLayout l;
        l.size = s.tau_bar_size();
        std::size_t next = 0;
        for (std::size_t c = 0; c < s.circles(); ++c) {
            std::vector<std::size_t> arcs;
            for (unsigned i = 0; i < s.boundary_punctures()[c]; ++i) {
                arcs.push_back(next);
                l.arc_names.push_back("be" + std::to_string(c) + "_" + std::to_string(i));
                ++next;
            }
            l.circle_arcs.push_back(std::move(arcs));
        }
        if (next > l.size) throw UnsupportedSurface("doubled arcs exceed the arc basis");
        for (std::size_t j = 0; next < l.size; ++next, ++j) l.arc_names.push_back("e" + std::to_string(j));
        l.lambda_circles = s.lambda_circles();
        return l;
    }

    const std::vector<std::size_t>& lambda_arcs(std::size_t lambda_pos) const {
        return circle_arcs.at(lambda_circles.at(lambda_pos));
    }
};

struct BSpec {
    TauBarLayout layout;
    unsigned modulus = 3;
};

// Alternating pattern of circle lambda_pos at level k: entries k, N-k, k, ...
// along the circle's doubled arcs, zero elsewhere; the zero vector when k = 0.
inline std::vector<long long> xck_pattern(std::size_t lambda_pos, unsigned k, const TauBarLayout& layout,
                                          unsigned n) {
    if (k >= n) throw std::invalid_argument("pattern level must lie in [0, N)");
    std::vector<long long> v(layout.size, 0);
    if (k == 0) return v;
    const auto& arcs = layout.lambda_arcs(lambda_pos);
    for (std::size_t i = 0; i < arcs.size(); ++i)
        v[arcs[i]] = (i % 2 == 0) ? static_cast<long long>(k) : static_cast<long long>(n - k);
    return v;
}

// Membership in the subgroup generated by the alternating patterns and N*Z:
// all entries off the participating circles' arcs vanish mod N, and along each
// participating circle the entries alternate as (k_c, -k_c, ...) mod N.
inline bool b_membership(const std::vector<long long>& v, const BSpec& spec) {
    const long long n = spec.modulus;
    if (v.size() != spec.layout.size) throw IndexMismatch("exponent length does not match arc layout");
    std::vector<bool> on_lambda(v.size(), false);
    for (std::size_t p = 0; p < spec.layout.lambda_circles.size(); ++p)
        for (std::size_t idx : spec.layout.lambda_arcs(p)) on_lambda[idx] = true;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!on_lambda[i] && mod_floor(v[i], n) != 0) return false;
    for (std::size_t p = 0; p < spec.layout.lambda_circles.size(); ++p) {
        const auto& arcs = spec.layout.lambda_arcs(p);
        long long kc = mod_floor(v[arcs[0]], n);
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            long long want = (i % 2 == 0) ? kc : mod_floor(-kc, n);
            if (mod_floor(v[arcs[i]], n) != want) return false;
        }
    }
    return true;
}

// The same subgroup as a lattice: columns N*e_i plus one alternating column
// per participating circle.
inline Lattice b_generators(const BSpec& spec) {
    const std::size_t n = spec.layout.size;
    const std::size_t extra = spec.layout.lambda_circles.size();
    IntMat gen(n, std::vector<Integer>(n + extra, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) gen[i][i] = Integer(static_cast<long>(spec.modulus));
    for (std::size_t p = 0; p < extra; ++p) {
        const auto& arcs = spec.layout.lambda_arcs(p);
        for (std::size_t i = 0; i < arcs.size(); ++i) gen[arcs[i]][n + p] = (i % 2 == 0) ? 1 : -1;
    }
    return Lattice::make(n, gen);
}

struct ExpectedDims {
    Integer over_frobenius;
    Integer over_center;
};

inline ExpectedDims expected_dims(const PbSurface& s, unsigned n) {
    const long long r = s.r_invariant();
    const long long lam = static_cast<long long>(s.lambda_circles().size());
    const long long p = s.interior_punctures();
    if (3 * r < 0 || 3 * r - lam - p < 0) throw UnsupportedSurface("negative dimension exponent");
    ExpectedDims d;
    d.over_frobenius = integer_pow(Integer(static_cast<long>(n)), static_cast<unsigned long>(3 * r));
    d.over_center =
        integer_pow(Integer(static_cast<long>(n)), static_cast<unsigned long>(3 * r - lam - p));
    return d;
}

// A user-supplied skew form claiming to describe a surface's arc algebra must
// have the layout's size and make every alternating pattern central mod N.
inline void validate_surface_form(const PbSurface& s, const TauBarLayout& layout, const SkewForm& form,
                                  unsigned n) {
    if (form.rank() != layout.size)
        throw std::invalid_argument("skew form size does not match the arc layout");
    for (std::size_t p = 0; p < layout.lambda_circles.size(); ++p)
        for (unsigned k = 0; k < n; ++k) {
            std::vector<long long> pat = xck_pattern(p, k, layout, n);
            for (std::size_t i = 0; i < form.rank(); ++i) {
                long long acc = 0;
                for (std::size_t j = 0; j < form.rank(); ++j) acc += form.entry(i, j) * pat[j];
                if (mod_floor(acc, n) != 0)
                    throw LatticeNotCentral("alternating pattern is not central for this form");
            }
        }
}

// Checks that every generator of the pattern subgroup is central for the form.
inline bool b_subset_of_central(const BSpec& spec, const SkewForm& form) {
    Lattice central = central_lattice(form, spec.modulus);
    Lattice b = b_generators(spec);
    const IntMat& gen = b.generators();
    for (std::size_t col = 0; col < gen[0].size(); ++col) {
        std::vector<long long> v(gen.size());
        for (std::size_t i = 0; i < gen.size(); ++i) v[i] = static_cast<long long>(gen[i][col].get_si());
        if (!central.member(v)) return false;
    }
    return true;
}

}  // namespace qtrace
