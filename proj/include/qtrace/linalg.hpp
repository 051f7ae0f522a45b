#pragma once

// Small dense matrices over exact field-like scalars (anything with +, -, *,
// /, is_zero, zero_like, one_like). Bareiss elimination keeps determinant
// intermediates as minors, which bounds coefficient growth without any gcd.

#include <optional>
#include <stdexcept>
#include <vector>

namespace qtrace {

template <typename F>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const F& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    F& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F> data_;
};

template <typename F>
F bareiss_determinant(Matrix<F> a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    F prev = a.at(0, 0).one_like();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t pivot = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!a.at(i, k).is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot == n) return a.at(0, 0).zero_like();
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    F det = a.at(n - 1, n - 1);
    return negate ? -det : det;
}

// Solves a*x = rhs by Gaussian elimination; returns nothing when singular.
template <typename F>
std::optional<std::vector<F>> gaussian_solve(Matrix<F> a, std::vector<F> rhs) {
    const std::size_t n = a.rows();
    if (n != a.cols() || rhs.size() != n) throw std::invalid_argument("bad linear system shape");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i)
            if (!a.at(i, k).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == n) return std::nullopt;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            std::swap(rhs[k], rhs[pivot]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k).is_zero()) continue;
            F factor = a.at(i, k) / a.at(k, k);
            for (std::size_t j = k; j < n; ++j) a.at(i, j) = a.at(i, j) - factor * a.at(k, j);
            rhs[i] = rhs[i] - factor * rhs[k];
        }
    }
    std::vector<F> x(n, rhs.empty() ? a.at(0, 0).zero_like() : rhs[0].zero_like());
    for (std::size_t i = n; i-- > 0;) {
        F acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) acc = acc - a.at(i, j) * x[j];
        x[i] = acc / a.at(i, i);
    }
    return x;
}

}  // namespace qtrace
