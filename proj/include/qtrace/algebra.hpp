#pragma once

// Finite-dimensional algebras over an exact field, given by structure
// constants: normalized trace (the 1/k-scaled diagonal of left
// multiplication), Gram matrix, symmetric-Frobenius certificates, and tensor
// products. Unit laws are always validated; associativity is checked
// exhaustively up to dimension 27 and on seeded random triples above.

#include <qtrace/cyclotomic.hpp>
#include <qtrace/linalg.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtrace {

struct AlgebraInvalid : std::runtime_error {
    explicit AlgebraInvalid(const std::string& what) : std::runtime_error(what) {}
};

template <typename F>
class FiniteDimAlgebra {
  public:
    // sparse vector over the basis, sorted by index, no explicit zeros
    using Sparse = std::vector<std::pair<std::uint32_t, F>>;

    static FiniteDimAlgebra make(std::vector<std::string> labels, std::vector<std::vector<Sparse>> table,
                                 std::vector<F> unit, F zero, std::uint64_t seed = 20240613) {
        FiniteDimAlgebra a;
        a.labels_ = std::move(labels);
        a.table_ = std::move(table);
        a.unit_ = std::move(unit);
        a.zero_ = std::move(zero);
        const std::size_t k = a.labels_.size();
        if (k == 0) throw AlgebraInvalid("zero-dimensional algebra");
        if (a.table_.size() != k || a.unit_.size() != k) throw AlgebraInvalid("table size mismatch");
        for (const auto& row : a.table_)
            if (row.size() != k) throw AlgebraInvalid("table size mismatch");

        a.validate_unit();
        a.validate_associativity(seed);
        a.compute_basis_traces();
        return a;
    }

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<F>& unit() const { return unit_; }
    const F& zero() const { return zero_; }
    const Sparse& product(std::size_t i, std::size_t j) const { return table_[i][j]; }

    std::vector<F> basis_vector(std::size_t i) const {
        std::vector<F> v(dim(), zero_);
        v[i] = zero_.one_like();
        return v;
    }

    std::vector<F> multiply(const std::vector<F>& x, const std::vector<F>& y) const {
        require_coords(x);
        require_coords(y);
        std::vector<F> out(dim(), zero_);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (y[j].is_zero()) continue;
                F scale = x[i] * y[j];
                for (const auto& [l, c] : table_[i][j]) out[l] = out[l] + scale * c;
            }
        }
        return out;
    }

    // Trace(x) = (1/k) * trace of left multiplication by x.
    F trace(const std::vector<F>& x) const {
        require_coords(x);
        F acc = zero_;
        for (std::size_t i = 0; i < dim(); ++i)
            if (!x[i].is_zero()) acc = acc + x[i] * basis_traces_[i];
        return acc;
    }
    const std::vector<F>& basis_traces() const { return basis_traces_; }

    // G_ij = Trace(e_i e_j)
    Matrix<F> gram_matrix() const {
        Matrix<F> g(dim(), dim(), zero_);
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) {
                F acc = zero_;
                for (const auto& [l, c] : table_[i][j]) acc = acc + c * basis_traces_[l];
                g.at(i, j) = acc;
            }
        return g;
    }

  private:
    void require_coords(const std::vector<F>& x) const {
        if (x.size() != dim()) throw AlgebraInvalid("coordinate vector has wrong length");
    }

    std::vector<F> sparse_to_dense(const Sparse& s) const {
        std::vector<F> v(dim(), zero_);
        for (const auto& [l, c] : s) {
            if (l >= dim()) throw AlgebraInvalid("structure constant index out of range");
            v[l] = v[l] + c;
        }
        return v;
    }

    void validate_unit() const {
        for (std::size_t i = 0; i < dim(); ++i) {
            std::vector<F> e(dim(), zero_);
            e[i] = zero_.one_like();
            if (multiply(unit_, e) != e || multiply(e, unit_) != e)
                throw AlgebraInvalid("unit law fails on basis element " + std::to_string(i));
        }
    }

    void validate_associativity(std::uint64_t seed) const {
        const std::size_t k = dim();
        auto check_triple = [&](std::size_t i, std::size_t j, std::size_t l) {
            std::vector<F> ei = basis_vector(i), ej = basis_vector(j), el = basis_vector(l);
            if (multiply(multiply(ei, ej), el) != multiply(ei, multiply(ej, el)))
                throw AlgebraInvalid("associativity fails on basis triple");
        };
        if (k <= 27) {
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    for (std::size_t l = 0; l < k; ++l) check_triple(i, j, l);
        } else {
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<std::size_t> pick(0, k - 1);
            for (int it = 0; it < 200; ++it) check_triple(pick(rng), pick(rng), pick(rng));
        }
    }

    void compute_basis_traces() {
        const std::size_t k = dim();
        // k as a field element; exact fields here have characteristic zero
        F kf = zero_;
        for (std::size_t i = 0; i < k; ++i) kf = kf + zero_.one_like();
        basis_traces_.assign(k, zero_);
        for (std::size_t i = 0; i < k; ++i) {
            F acc = zero_;
            for (std::size_t j = 0; j < k; ++j)
                for (const auto& [l, c] : table_[i][j])
                    if (l == j) acc = acc + c;
            basis_traces_[i] = acc / kf;
        }
    }

    std::vector<std::string> labels_;
    std::vector<std::vector<Sparse>> table_;
    std::vector<F> unit_;
    F zero_{};
    std::vector<F> basis_traces_;
};

template <typename F>
struct FrobeniusCertificate {
    Matrix<F> gram;
    bool symmetric = false;
    F determinant{};
    bool nondegenerate = false;
};

template <typename F>
FrobeniusCertificate<F> frobenius_certificate(const FiniteDimAlgebra<F>& alg) {
    FrobeniusCertificate<F> cert;
    cert.gram = alg.gram_matrix();
    cert.symmetric = true;
    for (std::size_t i = 0; i < alg.dim() && cert.symmetric; ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j)
            if (!(cert.gram.at(i, j) == cert.gram.at(j, i))) {
                cert.symmetric = false;
                break;
            }
    cert.determinant = bareiss_determinant(cert.gram);
    cert.nondegenerate = !cert.determinant.is_zero();
    return cert;
}

// Componentwise tensor product: basis pairs (i,j) -> i*dimB + j, structure
// constants multiply with no cross terms (the factors commute). Field
// mismatches surface from the scalar arithmetic itself (e.g. FieldMismatch
// for cyclotomic scalars over different roots).
template <typename F>
FiniteDimAlgebra<F> tensor_product(const FiniteDimAlgebra<F>& a, const FiniteDimAlgebra<F>& b,
                                   std::uint64_t seed = 20240613) {
    (void)(a.zero() + b.zero());  // probe scalar compatibility early
    const std::size_t ka = a.dim(), kb = b.dim(), k = ka * kb;
    std::vector<std::string> labels(k);
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < kb; ++j) labels[i * kb + j] = a.labels()[i] + "(x)" + b.labels()[j];

    std::vector<std::vector<typename FiniteDimAlgebra<F>::Sparse>> table(
        k, std::vector<typename FiniteDimAlgebra<F>::Sparse>(k));
    for (std::size_t i1 = 0; i1 < ka; ++i1)
        for (std::size_t j1 = 0; j1 < kb; ++j1)
            for (std::size_t i2 = 0; i2 < ka; ++i2)
                for (std::size_t j2 = 0; j2 < kb; ++j2) {
                    typename FiniteDimAlgebra<F>::Sparse entry;
                    for (const auto& [la, ca] : a.product(i1, i2))
                        for (const auto& [lb, cb] : b.product(j1, j2)) {
                            F c = ca * cb;
                            if (!c.is_zero())
                                entry.emplace_back(static_cast<std::uint32_t>(la * kb + lb), c);
                        }
                    std::sort(entry.begin(), entry.end(),
                              [](const auto& x, const auto& y) { return x.first < y.first; });
                    table[i1 * kb + j1][i2 * kb + j2] = std::move(entry);
                }

    std::vector<F> unit(k, a.zero());
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < kb; ++j) unit[i * kb + j] = a.unit()[i] * b.unit()[j];
    return FiniteDimAlgebra<F>::make(std::move(labels), std::move(table), std::move(unit), a.zero(), seed);
}

}  // namespace qtrace
