#include "lsob/linalg.hpp"

#include <algorithm>
#include <utility>

#include "lsob/errors.hpp"
#include "lsob/polynomial.hpp"

namespace lsob {

namespace {

std::vector<Rational> solve_bareiss(Matrix<Rational> m, std::vector<Rational> b) {
    const int n = m.rows;
    Rational prev(1);
    for (int k = 0; k < n; ++k) {
        if (is_zero(m(k, k))) {
            int r = k + 1;
            while (r < n && is_zero(m(r, k))) ++r;
            if (r == n) throw SingularSystem("singular system at column " + std::to_string(k));
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
            std::swap(b[k], b[r]);
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            b[i] = (m(k, k) * b[i] - m(i, k) * b[k]) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    std::vector<Rational> x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        Rational acc = b[i];
        for (int j = i + 1; j < n; ++j) acc -= m(i, j) * x[j];
        x[i] = acc / m(i, i);
    }
    return x;
}

std::vector<BigFloat> solve_partial_pivot(Matrix<BigFloat> m, std::vector<BigFloat> b) {
    const int n = m.rows;
    BigFloat scale(0);
    for (const BigFloat& v : m.data) scale = max(scale, abs(v));
    const BigFloat tiny = identity_tolerance() * identity_tolerance() * scale;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int r = k + 1; r < n; ++r)
            if (abs(m(r, k)) > abs(m(piv, k))) piv = r;
        if (abs(m(piv, k)) <= tiny) throw SingularSystem("singular system at column " + std::to_string(k));
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            std::swap(b[k], b[piv]);
        }
        for (int i = k + 1; i < n; ++i) {
            BigFloat f = m(i, k) / m(k, k);
            for (int j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
            b[i] -= f * b[k];
            m(i, k) = BigFloat(0);
        }
    }
    std::vector<BigFloat> x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        BigFloat acc = b[i];
        for (int j = i + 1; j < n; ++j) acc -= m(i, j) * x[j];
        x[i] = acc / m(i, i);
    }
    return x;
}

}  // namespace

template <Scalar T>
std::vector<T> solve_linear(Matrix<T> a, std::vector<T> b) {
    if (a.rows != a.cols || static_cast<int>(b.size()) != a.rows)
        throw std::invalid_argument("solve_linear: shape mismatch");
    if constexpr (is_exact_v<T>)
        return solve_bareiss(std::move(a), std::move(b));
    else
        return solve_partial_pivot(std::move(a), std::move(b));
}

template <Scalar T>
std::vector<T> ldl_pivots(Matrix<T> a) {
    const int n = a.rows;
    std::vector<T> pivots;
    for (int k = 0; k < n; ++k) {
        pivots.push_back(a(k, k));
        if (!(a(k, k) > T(0))) break;
        for (int i = k + 1; i < n; ++i) {
            T f = a(i, k) / a(k, k);
            for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return pivots;
}

template std::vector<Rational> solve_linear(Matrix<Rational>, std::vector<Rational>);
template std::vector<BigFloat> solve_linear(Matrix<BigFloat>, std::vector<BigFloat>);
template std::vector<Rational> ldl_pivots(Matrix<Rational>);
template std::vector<BigFloat> ldl_pivots(Matrix<BigFloat>);

std::vector<BigFloat> symmetric_eigenvalues(Matrix<BigFloat> a, const EigenOptions& opts) {
    const int n = a.rows;
    if (a.cols != n) throw std::invalid_argument("symmetric_eigenvalues: matrix not square");
    BigFloat fro(0);
    for (const BigFloat& v : a.data) fro += v * v;
    const BigFloat limit = identity_tolerance() * sqrt(fro);

    auto off_norm = [&] {
        BigFloat s(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += a(i, j) * a(i, j);
        return sqrt(s);
    };

    bool converged = false;
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        if (off_norm() <= limit) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (a(p, q).is_zero()) continue;
                BigFloat theta = (a(q, q) - a(p, p)) / (BigFloat(2) * a(p, q));
                BigFloat t = BigFloat(1) / (abs(theta) + sqrt(theta * theta + BigFloat(1)));
                if (theta.sign() < 0) t = -t;
                BigFloat c = BigFloat(1) / sqrt(t * t + BigFloat(1));
                BigFloat s = t * c;
                BigFloat apq = a(p, q);
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = BigFloat(0);
                a(q, p) = BigFloat(0);
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    BigFloat arp = a(r, p);
                    BigFloat arq = a(r, q);
                    a(r, p) = c * arp - s * arq;
                    a(p, r) = a(r, p);
                    a(r, q) = s * arp + c * arq;
                    a(q, r) = a(r, q);
                }
            }
        }
    }
    if (!converged && off_norm() > limit) throw NoConvergence("Jacobi eigensolver did not converge");

    std::vector<BigFloat> eig;
    eig.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig.push_back(a(i, i));
    std::sort(eig.begin(), eig.end(), [](const BigFloat& x, const BigFloat& y) { return x < y; });
    return eig;
}

}  // namespace lsob
