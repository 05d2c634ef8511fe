#ifndef LSOB_LINALG_HPP
#define LSOB_LINALG_HPP

#include <cstddef>
#include <vector>

#include "lsob/scalar.hpp"

namespace lsob {

/// Small dense row-major matrix.
template <Scalar T>
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<T> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), T(0)) {}

    T& operator()(int i, int j) { return data[static_cast<std::size_t>(i * cols + j)]; }
    const T& operator()(int i, int j) const { return data[static_cast<std::size_t>(i * cols + j)]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
};

/// Solves A x = b. Rational mode uses fraction-free (Bareiss) elimination,
/// float mode partial pivoting. Throws SingularSystem.
template <Scalar T>
std::vector<T> solve_linear(Matrix<T> a, std::vector<T> b);

/// Pivots of the unpivoted symmetric elimination (the D of A = L D L^T).
/// A symmetric matrix is positive definite iff all of them are positive;
/// elimination stops at the first non-positive pivot.
template <Scalar T>
std::vector<T> ldl_pivots(Matrix<T> a);

struct EigenOptions {
    int max_sweeps = 200;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
/// Sweeps continue until the off-diagonal Frobenius norm is at most
/// 2^(-precision/2) times the Frobenius norm of the input.
std::vector<BigFloat> symmetric_eigenvalues(Matrix<BigFloat> a, const EigenOptions& opts = {});

}  // namespace lsob

#endif  // LSOB_LINALG_HPP
