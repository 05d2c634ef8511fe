#ifndef LSOB_SOBOLEV_HPP
#define LSOB_SOBOLEV_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "lsob/laguerre.hpp"
#include "lsob/polynomial.hpp"

namespace lsob {

/// One mass point c_j < 0 with its derivative weights lambda_{j,k}.
template <Scalar T>
struct MassPoint {
    T c;
    /// k -> lambda_{j,k} >= 0. The largest key with a positive weight is d_j.
    std::map<int, T> lambdas;
};

/// An element (j, k) of I_+ = {(j, k) : lambda_{j,k} > 0}.
template <Scalar T>
struct MassTerm {
    int j;  ///< index into SobolevConfig::masses()
    int k;  ///< derivative order
    T c;
    T lambda;
};

/// Parameters of the inner product
///   <f, g>_S = int f g x^alpha e^{-x} dx + sum_{(j,k) in I_+} lambda_{j,k} f^(k)(c_j) g^(k)(c_j).
///
/// The constructor validates the mass points and sorts them canonically:
/// d_1 <= d_2 <= ... <= d_N, ties by increasing c_j.
template <Scalar T>
class SobolevConfig {
   public:
    SobolevConfig(T alpha, std::vector<MassPoint<T>> masses);

    const T& alpha() const { return alpha_; }
    const std::vector<MassPoint<T>>& masses() const { return masses_; }
    /// I_+ ordered by (j, k).
    const std::vector<MassTerm<T>>& terms() const { return terms_; }

    int mass_count() const { return static_cast<int>(masses_.size()); }  ///< N
    int order(int j) const { return orders_[static_cast<std::size_t>(j)]; }  ///< d_j
    int max_order() const { return orders_.empty() ? -1 : orders_.back(); }  ///< d_N
    int total_degree() const { return d_; }  ///< d = sum (d_j + 1)
    int term_count() const { return static_cast<int>(terms_.size()); }  ///< d*
    bool is_classical() const { return terms_.empty(); }

    /// Index of term (j, k) in terms(), or -1.
    int term_index(int j, int k) const;

   private:
    T alpha_;
    std::vector<MassPoint<T>> masses_;
    std::vector<int> orders_;
    std::vector<MassTerm<T>> terms_;
    int d_ = 0;
};

/// A configuration together with its Laguerre family (which also owns the
/// moments of the measure). Cheap to share; all members are immutable apart
/// from the family's internal caches.
template <Scalar T>
class SobolevSystem {
   public:
    explicit SobolevSystem(SobolevConfig<T> cfg)
        : cfg_(std::move(cfg)), fam_(std::make_shared<LaguerreFamily<T>>(cfg_.alpha())) {}

    const SobolevConfig<T>& config() const { return cfg_; }
    const LaguerreFamily<T>& family() const { return *fam_; }

   private:
    SobolevConfig<T> cfg_;
    std::shared_ptr<LaguerreFamily<T>> fam_;
};

/// <f, g>_S with the continuous part evaluated from exact moments.
template <Scalar T>
T sobolev_inner(const SobolevSystem<T>& sys, const Polynomial<T>& f, const Polynomial<T>& g);

/// Continuous part <f, g>_alpha only.
template <Scalar T>
T laguerre_inner(const LaguerreFamily<T>& fam, const Polynomial<T>& f, const Polynomial<T>& g);

/// Derivatives of the Christoffel–Darboux kernel K_{n-1} at the mass points.
template <Scalar T>
struct KernelSet {
    int n = 0;
    int size = 0;  ///< d*
    /// Row-major d* x d*; entry (a, b) is K_{n-1}^{(l_a, k_b)}(c_{i_a}, c_{j_b}).
    std::vector<T> values;
    /// K_{n-1}^{(0, k_b)}(x, c_{j_b}) as a polynomial in x, one per term.
    std::vector<Polynomial<T>> polys;

    const T& at(int a, int b) const { return values[static_cast<std::size_t>(a * size + b)]; }
};

/// Kernel derivatives by the truncated sum over L_0..L_{n-1}. In rational
/// mode every kernel polynomial is also checked against the closed
/// Christoffel–Darboux form. For n >= d the matrix must be positive definite
/// (PositiveDefiniteViolation otherwise).
template <Scalar T>
KernelSet<T> kernel_set(const SobolevSystem<T>& sys, int n);

/// Solves (I + K_{n-1} Lambda) s = (L_n^{(k)}(c_j)) for s = (S_n^{(k)}(c_j)),
/// indexed like config().terms().
template <Scalar T>
std::vector<T> solve_mass_derivatives(const SobolevSystem<T>& sys, int n);

template <Scalar T>
struct SobolevPolynomial {
    int n = 0;
    Polynomial<T> poly;
    /// S_n^{(k)}(c_j) for each term of I_+.
    std::vector<T> derivs_at_masses;
};

/// Monic S_n from the connection formula
/// S_n = L_n - sum lambda_{j,k} S_n^{(k)}(c_j) K_{n-1}^{(0,k)}(x, c_j).
/// Orthogonality against 1, x, ..., x^{n-1} is asserted (exactly in
/// rational mode).
template <Scalar T>
SobolevPolynomial<T> sobolev_poly(const SobolevSystem<T>& sys, int n);

/// Monic Gram–Schmidt orthogonalisation of 1, x, ..., x^n under <.,.>_S.
/// Independent of the kernel machinery; used as an oracle.
template <Scalar T>
Polynomial<T> gram_schmidt_oracle(const SobolevSystem<T>& sys, int n);

/// sigma_n = (1/h_{n-1}) sum lambda_{j,k} S_n^{(k)}(c_j) (L_n)^{(k)}(c_j), n >= 1.
template <Scalar T>
T sigma_from_sum(const SobolevSystem<T>& sys, const SobolevPolynomial<T>& sp);

struct SequentialOrderResult {
    bool ordered = true;
    /// First derivative level k whose hull meets the interior of the earlier ones.
    std::optional<int> witness;
};

/// Hull-nesting test: Delta_k must not meet the interior of the convex hull
/// of Delta_0, ..., Delta_{k-1} for k = 1..d_N.
template <Scalar T>
SequentialOrderResult is_sequentially_ordered(const SobolevConfig<T>& cfg);

}  // namespace lsob

#endif  // LSOB_SOBOLEV_HPP
