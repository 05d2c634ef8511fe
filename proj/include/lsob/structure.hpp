#ifndef LSOB_STRUCTURE_HPP
#define LSOB_STRUCTURE_HPP

#include <string>
#include <vector>

#include "lsob/sobolev.hpp"

namespace lsob {

/// rho = prod (x - c_j)^{d_j + 1} and its factors.
template <Scalar T>
struct RhoSet {
    Polynomial<T> rho;
    /// rho / (x - c_j)^{k+1}, one per term of I_+ (same order as terms()).
    std::vector<Polynomial<T>> rho_jk;
    Polynomial<T> rho_N;   ///< prod (x - c_j)
    Polynomial<T> rho_dN;  ///< prod (x - c_j)^{d_j}
};

template <Scalar T>
RhoSet<T> build_rho(const SobolevConfig<T>& cfg);

/// rho S_n = F2 L_n + G2 L_{n-1},  x (rho S_n)' = F3 L_n + G3 L_{n-1}.
///
/// `G2_hat` is G2 / gamma_n, formed directly with 1/h_n so that it is also
/// defined for n = 0 (where G2 itself vanishes).
template <Scalar T>
struct Connection {
    int n = 0;
    Polynomial<T> F2, G2, G2_hat, F3, G3;
    T sigma;      ///< coefficient of x^{d-1} in G2
    T sigma_hat;  ///< coefficient of x^{d-1} in G2_hat (= sigma_n / gamma_n for n >= 1)
};

template <Scalar T>
Connection<T> connection_coeffs(const SobolevSystem<T>& sys, const RhoSet<T>& rs, const SobolevPolynomial<T>& sp);

/// Everything of one degree n >= 1.
template <Scalar T>
struct StructureBundle {
    int n = 0;
    RhoSet<T> rs;
    Polynomial<T> S_n, S_prev;  ///< S_n, S_{n-1}
    Connection<T> cur, prev;    ///< connection data at n and n-1
    /// rho S_{n-1} = V2 L_n + W2 L_{n-1}, x (rho S_{n-1})' = V3 L_n + W3 L_{n-1}
    Polynomial<T> V2, W2, V3, W3;
    Polynomial<T> Delta, delta;
    Polynomial<T> Delta1, Delta2, Delta3;
    Polynomial<T> phi1, phi2, phi3;
    Polynomial<T> q0, q1, q2, q3, q4;
    Polynomial<T> P2, P1, P0;
    T sigma;       ///< sigma_n
    T sigma_hat;   ///< sigma_{n-1} / gamma_{n-1}
    T gamma;       ///< gamma_n
};

/// Builds the bundle for degree n >= 1. The connection identities and the
/// divisibilities rho | Delta_n, rho_{d-N} | Delta_{i,n} are asserted
/// (IdentityViolation / InexactDivision).
template <Scalar T>
StructureBundle<T> build_bundle(const SobolevSystem<T>& sys, const SobolevPolynomial<T>& sp,
                                const SobolevPolynomial<T>& sp_prev);

/// Convenience overload computing S_n and S_{n-1} itself.
template <Scalar T>
StructureBundle<T> build_bundle(const SobolevSystem<T>& sys, int n);

/// down: (q2 p + q0 p') / q1;  up: (q3 p + q0 p') / q4.
/// Throws NonPolynomialResult when the division is not exact.
template <Scalar T>
Polynomial<T> ladder_apply(const StructureBundle<T>& b, Ladder direction, const Polynomial<T>& p);

/// P2 S'' + P1 S' + P0 S for the given polynomial (normally S_n).
template <Scalar T>
Polynomial<T> ode_residual(const StructureBundle<T>& b, const Polynomial<T>& s);

/// q4_{n+1} q0_n S_{n+1} - [q3_{n+1} q0_n - q2_n q0_{n+1}] S_n - q1_n q0_{n+1} S_{n-1}.
template <Scalar T>
Polynomial<T> ttrr_residual(const StructureBundle<T>& bn, const StructureBundle<T>& bn1);

/// The two polynomial coefficients of the recurrence, A S_{n+1} = B S_n + C S_{n-1}:
/// A = q4_{n+1} q0_n, B = q3_{n+1} q0_n - q2_n q0_{n+1}, C = q1_n q0_{n+1}.
template <Scalar T>
struct TtrrCoefficients {
    Polynomial<T> A, B, C;
};

template <Scalar T>
TtrrCoefficients<T> ttrr_coefficients(const StructureBundle<T>& bn, const StructureBundle<T>& bn1);

/// Applies the raising operators of degrees 1..n to S_0 = 1, checking each
/// intermediate against sobolev_poly. Throws NonPolynomialResult or
/// IdentityViolation on mismatch.
template <Scalar T>
Polynomial<T> raise_from_constant(const SobolevSystem<T>& sys, int n);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Named identity checks of one bundle: connection forms, reconstruction of
/// L_n and L_{n-1}, divisibilities, both ladder residuals, the ODE residual,
/// and sigma_n computed two ways.
template <Scalar T>
std::vector<CheckResult> identity_checks(const SobolevSystem<T>& sys, const StructureBundle<T>& b);

template <Scalar T>
struct LedgerEntry {
    std::string name;
    Lcoef<T> expected;
    Lcoef<T> actual;
    bool pass = false;
};

/// Degree / leading-coefficient assertions for every structure polynomial.
/// Exact comparison in rational mode, relative 2^(-precision/2) in float mode.
template <Scalar T>
std::vector<LedgerEntry<T>> lcoef_ledger(const SobolevSystem<T>& sys, const StructureBundle<T>& b);

}  // namespace lsob

#endif  // LSOB_STRUCTURE_HPP
