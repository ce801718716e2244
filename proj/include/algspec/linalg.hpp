#pragma once

#include <optional>
#include <vector>

namespace algspec {

// Exact dense linear algebra over a field F, for the small systems that
// show up here (tens of unknowns, occasionally a few hundred).
template <class F>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<F> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, F()) {}
    F& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const F& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

// In-place reduced row echelon form; returns pivot columns.
template <class F>
std::vector<int> rref(Matrix<F>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i) {
            if (!(m.at(i, c) == F())) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        }
        F inv = F(1) / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            F f = m.at(i, c);
            if (f == F()) continue;
            for (int j = c; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Solve A x = b. Returns a particular solution (free variables set to 0),
// or nullopt when inconsistent.
template <class F>
std::optional<std::vector<F>> solve_linear(const Matrix<F>& A, const std::vector<F>& b) {
    Matrix<F> m(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) m.at(i, j) = A.at(i, j);
        m.at(i, A.cols) = b[i];
    }
    auto pivots = rref(m);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == A.cols) return std::nullopt;  // pivot in the rhs column
    }
    std::vector<F> x(A.cols, F());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = m.at(static_cast<int>(k), A.cols);
    return x;
}

// Basis of the nullspace of A.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& A) {
    Matrix<F> m = A;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(A.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int c = 0; c < A.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<F> v(A.cols, F());
        v[c] = F(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            v[pivots[k]] = F() - m.at(static_cast<int>(k), c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace algspec
