#ifndef LSOB_KERNELS_HPP
#define LSOB_KERNELS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "lsob/complex.hpp"
#include "lsob/scalar.hpp"

/// Data-parallel inner loops.
///
/// Each kernel has a serial reference and an OpenMP variant selected by
/// `Exec`. Both variants compute every output element with the same
/// sequence of operations, so their results are bit-identical; the tests
/// rely on that, and bench/ compares their throughput.
namespace lsob::kernels {

enum class Exec { serial, parallel };

/// Work size (in output elements) from which `Exec::parallel` is worth it
/// for the automatic choice below.
inline constexpr std::size_t kParallelThreshold = 48;

inline Exec choose(std::size_t work) { return work >= kParallelThreshold ? Exec::parallel : Exec::serial; }

/// Coefficient convolution (polynomial product) of two non-empty sequences.
template <Scalar T>
std::vector<T> convolve(std::span<const T> a, std::span<const T> b, Exec exec);

/// p(z) and p'(z) by Horner, real coefficients in ascending order.
void horner_with_derivative(std::span<const BigFloat> coeffs, const ComplexF& z, ComplexF& value, ComplexF& deriv);

/// One Jacobi-style Aberth–Ehrlich sweep: writes the correction for every
/// approximation using only the previous iterate, so the update order
/// does not matter.
void aberth_corrections(std::span<const BigFloat> coeffs, std::span<const ComplexF> z, std::span<ComplexF> out,
                        Exec exec);

/// out[k] = sum_{i != k} 1 / (omega[k] - omega[i])
void pairwise_gradient(std::span<const BigFloat> omega, std::span<BigFloat> out, Exec exec);

/// Row-major n x n matrix of the pairwise logarithmic interaction Hessian:
/// off-diagonal -1/(w_k - w_j)^2, diagonal sum_{i != k} 1/(w_k - w_i)^2.
void pairwise_hessian(std::span<const BigFloat> omega, std::span<BigFloat> out, Exec exec);

}  // namespace lsob::kernels

#endif  // LSOB_KERNELS_HPP
