#pragma once

// Small dense exact linear algebra over a field type T (Rational or
// Cyclotomic). T must provide + - * / and an is_zero(const T&) overload.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace crepant::linalg {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

template <typename T>
Matrix<T> identity(std::size_t n) {
    Matrix<T> m(n, std::vector<T>(n, T(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
    return m;
}

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    const std::size_t rows = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner == 0 ? 0 : b[0].size();
    Matrix<T> out(rows, std::vector<T>(cols, T(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != inner) throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (is_zero(a[i][k])) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
template <typename T>
std::vector<std::size_t> row_reduce(Matrix<T>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && is_zero(m[p][col])) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const T inv = T(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || is_zero(m[r][col])) continue;
            const T f = m[r][col];
            for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename T>
struct Solution {
    std::vector<T> values;  // one particular solution, free variables set to 0
    std::size_t rank = 0;
};

/// Solves a x = b for a possibly non-square a. Returns nullopt when inconsistent.
template <typename T>
std::optional<Solution<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    Matrix<T> aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        if (aug[i].size() != cols) throw std::invalid_argument("solve: ragged matrix");
        aug[i].push_back(b[i]);
    }
    const auto pivots = row_reduce(aug, cols);
    for (std::size_t r = pivots.size(); r < aug.size(); ++r) {
        if (!is_zero(aug[r][cols])) return std::nullopt;
    }
    Solution<T> sol{std::vector<T>(cols, T(0)), pivots.size()};
    for (std::size_t r = 0; r < pivots.size(); ++r) sol.values[pivots[r]] = aug[r][cols];
    return sol;
}

/// Gauss-Jordan inverse; nullopt when singular.
template <typename T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
    const std::size_t n = a.size();
    Matrix<T> aug = a;
    for (std::size_t i = 0; i < n; ++i) {
        if (aug[i].size() != n) throw std::invalid_argument("inverse: matrix not square");
        for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? T(1) : T(0));
    }
    if (row_reduce(aug, n).size() != n) return std::nullopt;
    Matrix<T> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i].assign(aug[i].begin() + static_cast<long>(n), aug[i].end());
    return inv;
}

template <typename T>
T determinant(Matrix<T> m) {
    const std::size_t n = m.size();
    T det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && is_zero(m[p][col])) ++p;
        if (p == n) return T(0);
        if (p != col) {
            std::swap(m[p], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const T inv = T(1) / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (is_zero(m[r][col])) continue;
            const T f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}  // namespace crepant::linalg
