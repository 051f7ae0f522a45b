#pragma once

// Finite-index subgroups of Z^n: Hermite normal form for membership and coset
// representatives, Smith normal form for solving P*k = 0 (mod N). All integer
// arithmetic is arbitrary-precision.

#include <qtrace/rational.hpp>

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace qtrace {

using IntMat = std::vector<std::vector<Integer>>;  // row-major

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Column-style Hermite normal form of a full-rank n x m matrix (m >= n):
// returns the n x n lower-triangular basis with positive diagonal and
// canonically reduced off-diagonal entries (0 <= H[r][j] < H[r][r] for j < r).
inline IntMat column_hnf(const IntMat& a) {
    const std::size_t n = a.size();
    const std::size_t m = n == 0 ? 0 : a[0].size();
    IntMat h = a;
    for (const auto& row : h)
        if (row.size() != m) throw std::invalid_argument("ragged matrix");

    auto col_sub = [&](std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < n; ++r) h[r][dst] -= q * h[r][src];
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][j]);
    };

    std::size_t p = 0;
    for (std::size_t r = 0; r < n; ++r) {
        // euclidean reduction across columns >= p until one nonzero remains in row r
        while (true) {
            std::size_t best = m;
            for (std::size_t j = p; j < m; ++j) {
                if (h[r][j] == 0) continue;
                if (best == m || cmp(abs(h[r][j]), abs(h[r][best])) < 0) best = j;
            }
            if (best == m) throw std::invalid_argument("lattice generators are not full rank");
            col_swap(p, best);
            bool clean = true;
            for (std::size_t j = p + 1; j < m; ++j) {
                if (h[r][j] == 0) continue;
                col_sub(j, p, floor_div(h[r][j], h[r][p]));
                if (h[r][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (h[r][p] < 0)
            for (std::size_t i = 0; i < n; ++i) h[i][p] = -h[i][p];
        for (std::size_t j = 0; j < p; ++j) col_sub(j, p, floor_div(h[r][j], h[r][p]));
        ++p;
    }

    IntMat out(n, std::vector<Integer>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out[r][c] = h[r][c];
    return out;
}

// Smith normal form D = U*A*V; only V (accumulated column operations) and the
// diagonal are returned, which is what lattice preimage computations need.
struct SmithResult {
    std::vector<Integer> diag;  // length min(n, m), divisibility chain, nonneg
    IntMat v;                   // m x m unimodular
};

inline SmithResult smith_normal_form(const IntMat& a) {
    const std::size_t n = a.size();
    const std::size_t m = n == 0 ? 0 : a[0].size();
    IntMat w = a;
    IntMat v(m, std::vector<Integer>(m, Integer(0)));
    for (std::size_t i = 0; i < m; ++i) v[i][i] = 1;

    auto row_sub = [&](std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < m; ++c) w[dst][c] -= q * w[src][c];
    };
    auto col_sub = [&](std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < n; ++r) w[r][dst] -= q * w[r][src];
        for (std::size_t r = 0; r < m; ++r) v[r][dst] -= q * v[r][src];
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < n; ++r) std::swap(w[r][i], w[r][j]);
        for (std::size_t r = 0; r < m; ++r) std::swap(v[r][i], v[r][j]);
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(w[i], w[j]);
    };

    const std::size_t rank_cap = std::min(n, m);
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < rank_cap; ++t) {
        // locate smallest nonzero entry in the trailing block
        std::size_t pi = n, pj = m;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < m; ++j) {
                if (w[i][j] == 0) continue;
                if (pi == n || cmp(abs(w[i][j]), abs(w[pi][pj])) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == n) break;  // trailing block is zero
        row_swap(t, pi);
        col_swap(t, pj);

        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (w[i][t] == 0) continue;
                row_sub(i, t, floor_div(w[i][t], w[t][t]));
                if (w[i][t] != 0) {
                    row_swap(t, i);
                    again = true;
                }
            }
            for (std::size_t j = t + 1; j < m; ++j) {
                if (w[t][j] == 0) continue;
                col_sub(j, t, floor_div(w[t][j], w[t][t]));
                if (w[t][j] != 0) {
                    col_swap(t, j);
                    again = true;
                }
            }
            if (!again) {
                // enforce the divisibility chain on the trailing block
                for (std::size_t i = t + 1; i < n && !again; ++i)
                    for (std::size_t j = t + 1; j < m && !again; ++j)
                        if (w[i][j] % w[t][t] != 0) {
                            col_sub(t, j, Integer(-1));  // add column j into column t
                            again = true;
                        }
            }
        }
        if (w[t][t] < 0) {
            for (std::size_t c = 0; c < m; ++c) w[t][c] = -w[t][c];
        }
        diag.push_back(w[t][t]);
    }
    while (diag.size() < rank_cap) diag.push_back(Integer(0));
    return {std::move(diag), std::move(v)};
}

// A finite-index subgroup L of Z^n given by generating columns. Membership and
// canonical coset representatives come from the HNF basis.
class Lattice {
  public:
    static Lattice make(std::size_t n, const IntMat& generator_columns) {
        Lattice l;
        l.n_ = n;
        l.generators_ = generator_columns;
        l.hnf_ = column_hnf(generator_columns);
        l.index_ = 1;
        for (std::size_t i = 0; i < n; ++i) l.index_ *= l.hnf_[i][i];
        return l;
    }

    std::size_t rank() const { return n_; }
    const IntMat& generators() const { return generators_; }
    const IntMat& hnf() const { return hnf_; }
    const Integer& index() const { return index_; }

    bool member(const std::vector<long long>& v) const {
        std::vector<Integer> w = to_integer(v);
        reduce(w);
        for (const auto& x : w)
            if (x != 0) return false;
        return true;
    }

    // Canonical coset representative with entries in [0, H[r][r]).
    std::vector<long long> canonical(const std::vector<long long>& v) const {
        std::vector<Integer> w = to_integer(v);
        reduce(w);
        std::vector<long long> out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = static_cast<long long>(w[i].get_si());
        return out;
    }

    // All canonical representatives, in lexicographic order.
    std::vector<std::vector<long long>> transversal(std::size_t cap = 500000) const {
        if (index_ > static_cast<long>(cap)) throw std::length_error("lattice index too large to enumerate");
        std::vector<std::vector<long long>> out;
        std::vector<long long> cur(n_, 0);
        enumerate(0, cur, out);
        return out;
    }

    bool contains_scaled_identity(long long n_scale) const {
        for (std::size_t i = 0; i < n_; ++i) {
            std::vector<long long> v(n_, 0);
            v[i] = n_scale;
            if (!member(v)) return false;
        }
        return true;
    }

  private:
    std::vector<Integer> to_integer(const std::vector<long long>& v) const {
        if (v.size() != n_) throw std::invalid_argument("vector length does not match lattice rank");
        std::vector<Integer> w(n_);
        for (std::size_t i = 0; i < n_; ++i) w[i] = Integer(static_cast<long>(v[i]));
        return w;
    }
    void reduce(std::vector<Integer>& w) const {
        for (std::size_t r = 0; r < n_; ++r) {
            Integer q = floor_div(w[r], hnf_[r][r]);
            if (q == 0) continue;
            for (std::size_t i = r; i < n_; ++i) w[i] -= q * hnf_[i][r];
        }
    }
    void enumerate(std::size_t r, std::vector<long long>& cur, std::vector<std::vector<long long>>& out) const {
        if (r == n_) {
            // every vector with entries in [0, H[r][r]) is already canonical
            out.push_back(cur);
            return;
        }
        const long long d = static_cast<long long>(hnf_[r][r].get_si());
        for (long long x = 0; x < d; ++x) {
            cur[r] = x;
            enumerate(r + 1, cur, out);
        }
        cur[r] = 0;
    }

    std::size_t n_ = 0;
    IntMat generators_;
    IntMat hnf_;
    Integer index_ = 1;
};

// Solutions of P*k = 0 (mod modulus): the preimage lattice computed from the
// Smith normal form of P.
inline Lattice central_lattice_of_matrix(const IntMat& p, long long modulus) {
    const std::size_t n = p.size();
    SmithResult s = smith_normal_form(p);
    Integer mod(static_cast<long>(modulus));
    IntMat gen(n, std::vector<Integer>(n));
    for (std::size_t j = 0; j < n; ++j) {
        Integer d = j < s.diag.size() ? s.diag[j] : Integer(0);
        Integer g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t());
        Integer scale = mod / g;
        for (std::size_t i = 0; i < n; ++i) gen[i][j] = s.v[i][j] * scale;
    }
    return Lattice::make(n, gen);
}

}  // namespace qtrace
