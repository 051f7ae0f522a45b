#pragma once

// Normalized Chebyshev polynomials of the first kind:
//   T_0 = 2, T_1 = x, T_n = x*T_{n-1} - T_{n-2},
// characterized by T_n(y + 1/y) = y^n + y^{-n}. With this normalization the
// product rule is uniform: T_a * T_b = T_{a+b} + T_{|a-b|} for all a, b >= 0.

#include <qtrace/poly.hpp>
#include <qtrace/rational.hpp>

#include <deque>
#include <map>
#include <utility>
#include <vector>

namespace qtrace {

// Finite combination sum_k c_k T_k, keyed by k; absent keys are zero.
using ChebSeries = std::map<unsigned, Rational>;

inline void cheb_add_term(ChebSeries& s, unsigned k, const Rational& c) {
    if (c == 0) return;
    auto it = s.find(k);
    if (it == s.end()) {
        s.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) s.erase(it);
    }
}

inline ChebSeries cheb_mul(const ChebSeries& a, const ChebSeries& b) {
    ChebSeries out;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) {
            Rational c = ci * cj;
            cheb_add_term(out, i + j, c);
            cheb_add_term(out, i > j ? i - j : j - i, c);
        }
    return out;
}

inline const RatPoly& chebyshev_t(unsigned n) {
    // Deque, not vector: callers may hold several returned references within a
    // single expression, so growth must not invalidate references.
    static std::deque<RatPoly> table = {RatPoly(Rational(2)), RatPoly::monomial(1)};
    while (table.size() <= n) {
        std::size_t m = table.size();
        table.push_back(RatPoly::monomial(1) * table[m - 1] - table[m - 2]);
    }
    return table[n];
}

// Expansion of an arbitrary polynomial in the T-basis, computed Horner-style
// (multiplication by x sends T_k to T_{k+1} + T_{k-1}, and T_0 to 2 T_1).
inline ChebSeries chebyshev_expand(const RatPoly& f) {
    ChebSeries acc;
    for (long i = f.degree(); i >= 0; --i) {
        ChebSeries next;
        for (const auto& [k, c] : acc) {
            if (k == 0) {
                cheb_add_term(next, 1, c * 2);
            } else {
                cheb_add_term(next, k + 1, c);
                cheb_add_term(next, k - 1, c);
            }
        }
        cheb_add_term(next, 0, f[static_cast<std::size_t>(i)] / 2);
        acc = std::move(next);
    }
    return acc;
}

inline RatPoly cheb_series_to_poly(const ChebSeries& s) {
    RatPoly out;
    for (const auto& [k, c] : s) out = out + chebyshev_t(k) * c;
    return out;
}

// Projection of f onto the span of {T_k : N | k}, returned in the power basis.
// This equals the normalized module trace of multiplication by f on the free
// C[T_N(x)]-module with basis {T_0, ..., T_{N-1}}.
inline RatPoly chebyshev_trace_filter(const RatPoly& f, unsigned n) {
    ChebSeries kept;
    for (const auto& [k, c] : chebyshev_expand(f))
        if (k % n == 0) kept.emplace(k, c);
    return cheb_series_to_poly(kept);
}

// Decomposition of T_m over the basis {T_0, ..., T_{N-1}} with coefficients in
// the span of {T_{jN}}: T_m = sum_r f_r * T_r (Chebyshev products). Built from
// T_m = T_N * T_{m-N} - T_{|m-2N|}.
//
// Returned map: residue r -> f_r, where each f_r is supported on multiples of N.
inline const std::map<unsigned, ChebSeries>& frobenius_split(unsigned m, unsigned n) {
    static std::map<unsigned, std::vector<std::map<unsigned, ChebSeries>>> cache;
    auto& table = cache[n];
    if (m < table.size() && !table[m].empty()) return table[m];
    if (table.size() <= m) table.resize(m + 1);

    // fill bottom-up so the recurrence only looks backwards
    for (unsigned k = 0; k <= m; ++k) {
        if (!table[k].empty()) continue;
        std::map<unsigned, ChebSeries>& e = table[k];
        if (k < n) {
            e[k] = ChebSeries{{0, Rational(1, 2)}};
        } else if (k == n) {
            e[0] = ChebSeries{{n, Rational(1, 2)}};
        } else {
            const ChebSeries tn{{n, Rational(1)}};
            const auto& prev = table[k - n];
            for (const auto& [r, f] : prev) {
                ChebSeries lifted = cheb_mul(tn, f);
                for (const auto& [idx, c] : lifted) cheb_add_term(e[r], idx, c);
            }
            const unsigned back = k >= 2 * n ? k - 2 * n : 2 * n - k;
            for (const auto& [r, f] : table[back])
                for (const auto& [idx, c] : f) cheb_add_term(e[r], idx, -c);
            for (auto it = e.begin(); it != e.end();)
                it = it->second.empty() ? e.erase(it) : std::next(it);
        }
        if (e.empty()) e[0] = ChebSeries{};  // keep "computed" marker non-empty-safe
    }
    return table[m];
}

}  // namespace qtrace
