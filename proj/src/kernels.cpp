#include "lsob/kernels.hpp"

#include <algorithm>
#include <cassert>

namespace lsob::kernels {

namespace {

template <Scalar T>
T convolve_at(std::span<const T> a, std::span<const T> b, std::ptrdiff_t k) {
    const auto na = static_cast<std::ptrdiff_t>(a.size());
    const auto nb = static_cast<std::ptrdiff_t>(b.size());
    T acc(0);
    for (std::ptrdiff_t i = std::max<std::ptrdiff_t>(0, k - nb + 1); i <= std::min(k, na - 1); ++i)
        acc += a[i] * b[k - i];
    return acc;
}

ComplexF aberth_correction_at(std::span<const BigFloat> coeffs, std::span<const ComplexF> z, std::size_t i) {
    ComplexF value, deriv;
    horner_with_derivative(coeffs, z[i], value, deriv);
    if (is_zero(value.re) && is_zero(value.im)) return ComplexF();
    ComplexF newton = value / deriv;
    ComplexF repulsion;
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == i) continue;
        repulsion += ComplexF(BigFloat(1)) / (z[i] - z[j]);
    }
    return newton / (ComplexF(BigFloat(1)) - newton * repulsion);
}

BigFloat pairwise_gradient_at(std::span<const BigFloat> omega, std::size_t k) {
    BigFloat acc(0);
    for (std::size_t i = 0; i < omega.size(); ++i)
        if (i != k) acc += BigFloat(1) / (omega[k] - omega[i]);
    return acc;
}

void pairwise_hessian_row(std::span<const BigFloat> omega, std::span<BigFloat> out, std::size_t k) {
    const std::size_t n = omega.size();
    BigFloat diag(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        BigFloat diff = omega[k] - omega[j];
        BigFloat inv_sq = BigFloat(1) / (diff * diff);
        out[k * n + j] = -inv_sq;
        diag += inv_sq;
    }
    out[k * n + k] = diag;
}

}  // namespace

template <Scalar T>
std::vector<T> convolve(std::span<const T> a, std::span<const T> b, Exec exec) {
    assert(!a.empty() && !b.empty());
    const auto size = static_cast<std::ptrdiff_t>(a.size() + b.size() - 1);
    std::vector<T> out(static_cast<std::size_t>(size));
    if (exec == Exec::serial) {
        for (std::ptrdiff_t k = 0; k < size; ++k) out[k] = convolve_at(a, b, k);
    } else {
#pragma omp parallel for schedule(dynamic, 4)
        for (std::ptrdiff_t k = 0; k < size; ++k) out[k] = convolve_at(a, b, k);
    }
    return out;
}

template std::vector<Rational> convolve(std::span<const Rational>, std::span<const Rational>, Exec);
template std::vector<BigFloat> convolve(std::span<const BigFloat>, std::span<const BigFloat>, Exec);

void horner_with_derivative(std::span<const BigFloat> coeffs, const ComplexF& z, ComplexF& value, ComplexF& deriv) {
    value = ComplexF();
    deriv = ComplexF();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        deriv = deriv * z + value;
        value = value * z + ComplexF(coeffs[i]);
    }
}

void aberth_corrections(std::span<const BigFloat> coeffs, std::span<const ComplexF> z, std::span<ComplexF> out,
                        Exec exec) {
    assert(out.size() == z.size());
    const auto n = static_cast<std::ptrdiff_t>(z.size());
    if (exec == Exec::serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = aberth_correction_at(coeffs, z, i);
    } else {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = aberth_correction_at(coeffs, z, i);
    }
}

void pairwise_gradient(std::span<const BigFloat> omega, std::span<BigFloat> out, Exec exec) {
    assert(out.size() == omega.size());
    const auto n = static_cast<std::ptrdiff_t>(omega.size());
    if (exec == Exec::serial) {
        for (std::ptrdiff_t k = 0; k < n; ++k) out[k] = pairwise_gradient_at(omega, k);
    } else {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t k = 0; k < n; ++k) out[k] = pairwise_gradient_at(omega, k);
    }
}

void pairwise_hessian(std::span<const BigFloat> omega, std::span<BigFloat> out, Exec exec) {
    assert(out.size() == omega.size() * omega.size());
    const auto n = static_cast<std::ptrdiff_t>(omega.size());
    if (exec == Exec::serial) {
        for (std::ptrdiff_t k = 0; k < n; ++k) pairwise_hessian_row(omega, out, k);
    } else {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t k = 0; k < n; ++k) pairwise_hessian_row(omega, out, k);
    }
}

}  // namespace lsob::kernels
