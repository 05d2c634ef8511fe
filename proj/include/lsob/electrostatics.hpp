#ifndef LSOB_ELECTROSTATICS_HPP
#define LSOB_ELECTROSTATICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lsob/linalg.hpp"
#include "lsob/roots.hpp"
#include "lsob/structure.hpp"

namespace lsob {

enum class PoleKind { origin, mass, delta_root, phi1_root };

const char* pole_kind_name(PoleKind k);

/// One term A / (x - p) of P1/P2 = -1 + sum A_p / (x - p).
struct Pole {
    PoleKind kind;
    int index;  ///< mass index, root index of delta_n, or index into e_poles
    ComplexF location;
    ComplexF weight;
};

struct AssumptionStatus {
    bool holds = true;
    std::vector<std::string> diagnostics;

    void fail(std::string why) {
        holds = false;
        diagnostics.push_back(std::move(why));
    }
};

/// External field of the zeros of S_n.
///
/// Per charge the external potential is
///   h(w) = w/2 - 1/2 sum_p Re[A_p Log(w - p)],
/// so h' = -P1/(2 P2) and h'' = -(P1/P2)'/2 on the real axis.
struct ElectrostaticModel {
    int n = 0;
    ZeroSet zeros;    ///< zeros of S_n
    ZeroSet u_roots;  ///< zeros of delta_n
    ZeroSet e_roots;  ///< zeros of phi_{1,n}
    /// Distinct zeros of phi_{1,n} with their multiplicities ell_4.
    std::vector<ComplexF> e_poles;
    std::vector<int> ell4;

    std::vector<BigFloat> masses;  ///< c_j in config order
    std::vector<int> orders;       ///< d_j

    Polynomial<BigFloat> psi1, psi2;
    Polynomial<BigFloat> P1, P2;

    ComplexF r0;
    std::vector<ComplexF> r_c, r_u;
    BigFloat ell1;
    std::vector<BigFloat> ell2;
    std::vector<ComplexF> ell3;  ///< 1 + r(u_i); a zero value marks a removable pole

    std::vector<Pole> poles;
    /// False when psi2 has a repeated root; the field then falls back to the
    /// direct rational function and the energy is unavailable.
    bool decomposition_valid = true;

    AssumptionStatus assumption1, assumption2, assumption3;
};

/// Builds the model from a bundle; conversion to big-floats happens at the
/// current default precision. Assumption failures are recorded, not thrown.
template <Scalar T>
ElectrostaticModel build_model(const SobolevSystem<T>& sys, const StructureBundle<T>& b);

/// h(w), h'(w), h''(w) from the pole decomposition.
BigFloat external_potential(const ElectrostaticModel& m, const BigFloat& w);
BigFloat external_first(const ElectrostaticModel& m, const BigFloat& w);
BigFloat external_second(const ElectrostaticModel& m, const BigFloat& w);
/// -(P1/P2)'(w) / 2 straight from the differential-equation coefficients.
BigFloat external_second_direct(const ElectrostaticModel& m, const BigFloat& w);

/// E(w) = sum_{k<j} log 1/|w_j - w_k| + sum_k h(w_k). Throws PoleCollision.
BigFloat energy(const ElectrostaticModel& m, const std::vector<BigFloat>& w);

std::vector<BigFloat> gradient(const ElectrostaticModel& m, const std::vector<BigFloat>& w,
                               kernels::Exec exec = kernels::Exec::serial);

Matrix<BigFloat> hessian(const ElectrostaticModel& m, const std::vector<BigFloat>& w,
                         kernels::Exec exec = kernels::Exec::serial);

enum class Classification { LocalMin, Saddle, Degenerate };

const char* classification_name(Classification c);

struct ConditionalResult {
    std::vector<int> fixed;  ///< 1-based indices of pinned charges
    std::vector<BigFloat> eigenvalues;
    bool positive_definite = false;
};

struct ElectrostaticReport {
    ElectrostaticModel model;
    std::vector<BigFloat> gradient;
    BigFloat gradient_residual;  ///< max |dE/dw_k| at the zeros
    Matrix<BigFloat> hessian;
    std::vector<BigFloat> hessian_eigenvalues;
    Classification classification = Classification::Degenerate;
    /// 1-based positions (in ascending eigenvalue order) of negative eigenvalues.
    std::vector<int> negative_indices;
    /// h''(x_k) per zero, and whether all are positive.
    std::vector<BigFloat> external_second;
    bool sufficient_condition = false;
    std::optional<ConditionalResult> conditional;
    std::vector<std::string> diagnostics;
};

/// Hessian at the zeros, its spectrum and the resulting classification.
/// For a saddle the first m charges (m = number of non-positive
/// eigenvalues) are pinned and the truncated Hessian is examined.
ElectrostaticReport classify(const ElectrostaticModel& m, kernels::Exec exec = kernels::Exec::serial);

/// Truncated Hessian over the charges not listed in `fixed` (1-based).
ConditionalResult conditional_equilibrium(const ElectrostaticReport& r, const std::vector<int>& fixed);

}  // namespace lsob

#endif  // LSOB_ELECTROSTATICS_HPP
