#ifndef LSOB_ROOTS_HPP
#define LSOB_ROOTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lsob/kernels.hpp"
#include "lsob/sobolev.hpp"

namespace lsob {

/// All roots of one polynomial, sorted by (real part, imaginary part).
struct ZeroSet {
    std::string label;
    std::vector<ComplexF> roots;
    /// |p(r)| per root at working precision.
    std::vector<BigFloat> residuals;
    /// max of `residuals`.
    BigFloat residual_bound;
    std::vector<bool> simple;
    /// Smallest pairwise distance (0 for fewer than two roots).
    BigFloat min_separation;
    bool converged = true;
    int sweeps = 0;

    std::size_t size() const { return roots.size(); }
    bool all_real() const;
    bool all_simple() const;
    /// Real parts of the roots; meaningful when all_real().
    std::vector<BigFloat> real_parts() const;
};

struct RootOptions {
    int max_sweeps = 200;
    /// Throw NoConvergence instead of returning a flagged partial result.
    bool strict = true;
    kernels::Exec exec = kernels::Exec::serial;
};

/// Simultaneous Aberth–Ehrlich iteration at twice the default precision,
/// then Newton polishing at the default precision. Near-real roots are
/// snapped onto the axis and non-real roots are paired into exact
/// conjugates.
ZeroSet find_roots(const Polynomial<BigFloat>& p, std::string label = {}, const RootOptions& opts = {});
ZeroSet find_roots(const Polynomial<Rational>& p, std::string label = {}, const RootOptions& opts = {});

/// Number of real roots in the open interval (a, b); an empty bound is infinite.
int real_roots_in(const ZeroSet& zs, const std::optional<BigFloat>& a, const std::optional<BigFloat>& b);

template <Scalar T>
int real_roots_in(const Polynomial<T>& p, const std::optional<BigFloat>& a, const std::optional<BigFloat>& b) {
    return real_roots_in(find_roots(p), a, b);
}

/// Which zeros sit near the mass points rather than on (0, inf).
struct ZeroLocation {
    /// Per mass point (config order): the zero matched to it, if any.
    std::vector<std::optional<ComplexF>> attracted;
    /// Zeros outside (0, inf).
    int outside_count = 0;
    /// Zeros in (0, inf).
    int positive_count = 0;
    /// Each mass point holds exactly one zero closer to it than to [0, inf).
    bool one_per_mass = false;
    /// The remaining n - N zeros lie in (0, inf).
    bool rest_positive = false;
};

template <Scalar T>
ZeroLocation zero_location_check(const SobolevConfig<T>& cfg, const ZeroSet& zs);

}  // namespace lsob

#endif  // LSOB_ROOTS_HPP
