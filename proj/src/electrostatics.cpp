#include "lsob/electrostatics.hpp"

#include <algorithm>
#include <string>

#include "lsob/errors.hpp"

namespace lsob {

namespace {

BigFloat pow2(long e) { return ldexp(BigFloat(1), e); }

bool is_zero_c(const ComplexF& z) { return z.re.is_zero() && z.im.is_zero(); }

// Two computed points closer than this are treated as the same point.
BigFloat coincidence_tol() { return pow2(-static_cast<long>(BigFloat::default_precision() / 4)); }

bool coincide(const ComplexF& a, const ComplexF& b) {
    return abs(a - b) <= coincidence_tol() * (BigFloat(1) + abs(a));
}

ZeroSet roots_or_empty(const Polynomial<BigFloat>& p, const std::string& label) {
    if (p.degree() >= 1) return find_roots(p, label);
    ZeroSet zs;
    zs.label = label;
    zs.residual_bound = BigFloat(0);
    zs.min_separation = BigFloat(0);
    return zs;
}

std::string fmt(const BigFloat& x) { return x.to_string(12); }
std::string fmt(const ComplexF& z) {
    if (z.im.is_zero()) return fmt(z.re);
    return fmt(z.re) + (z.im.sign() < 0 ? " - " : " + ") + fmt(abs(z.im)) + "i";
}

ComplexF residue(const ElectrostaticModel& m, const ComplexF& p) {
    const ComplexF num = evaluate(m.psi1, p);
    const ComplexF den = evaluate(derivative(m.psi2), p);
    return num / den;
}

// Re[A Log(w - p)] for real w; the branch cut is never crossed because
// w - p is either real or has the fixed imaginary part -Im p.
BigFloat re_a_log(const ComplexF& a, const ComplexF& p, const BigFloat& w) {
    const ComplexF z = ComplexF(w) - p;
    if (is_zero_c(z)) throw PoleCollision("charge on the pole " + fmt(p));
    BigFloat out = a.re * log(abs(z));
    if (!a.im.is_zero()) out -= a.im * arg(z);
    return out;
}

void check_distinct(const std::vector<BigFloat>& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] == w[j]) throw PoleCollision("two charges at " + fmt(w[i]));
}

}  // namespace

const char* pole_kind_name(PoleKind k) {
    switch (k) {
        case PoleKind::origin:
            return "origin";
        case PoleKind::mass:
            return "mass";
        case PoleKind::delta_root:
            return "delta_root";
        case PoleKind::phi1_root:
            return "phi1_root";
    }
    return "?";
}

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::LocalMin:
            return "LocalMin";
        case Classification::Saddle:
            return "Saddle";
        case Classification::Degenerate:
            return "Degenerate";
    }
    return "?";
}

template <Scalar T>
ElectrostaticModel build_model(const SobolevSystem<T>& sys, const StructureBundle<T>& b) {
    const auto& cfg = sys.config();
    ElectrostaticModel m;
    m.n = b.n;
    for (int j = 0; j < cfg.mass_count(); ++j) {
        m.masses.push_back(to_bigfloat(cfg.masses()[j].c));
        m.orders.push_back(cfg.order(j));
    }

    {
        const Polynomial<T> psi2 = Polynomial<T>::monomial(1) * b.rs.rho_N * b.delta;
        const Polynomial<T> psi1 = b.phi2 + b.phi3 + psi2;
        m.psi2 = to_bigfloat(psi2);
        m.psi1 = to_bigfloat(psi1);
    }
    m.P1 = to_bigfloat(b.P1);
    m.P2 = to_bigfloat(b.P2);

    m.zeros = find_roots(to_bigfloat(b.S_n), "S_n");
    m.u_roots = roots_or_empty(to_bigfloat(b.delta), "delta_n");
    m.e_roots = roots_or_empty(to_bigfloat(b.phi1), "phi1_n");

    // Group numerically coincident zeros of phi1 into poles with multiplicity.
    for (const auto& e : m.e_roots.roots) {
        auto it = std::find_if(m.e_poles.begin(), m.e_poles.end(), [&](const ComplexF& p) { return coincide(p, e); });
        if (it == m.e_poles.end()) {
            m.e_poles.push_back(e);
            m.ell4.push_back(1);
        } else {
            ++m.ell4[static_cast<std::size_t>(it - m.e_poles.begin())];
        }
    }

    // Assumption 1: zeros of delta_n real, simple, away from S_n zeros, masses and 0.
    for (std::size_t i = 0; i < m.u_roots.size(); ++i) {
        const ComplexF& u = m.u_roots.roots[i];
        const std::string at = "delta_n root " + fmt(u);
        if (!u.im.is_zero()) m.assumption1.fail(at + " is not real");
        if (!m.u_roots.simple[i]) {
            m.assumption1.fail(at + " is not simple");
            m.decomposition_valid = false;
        }
        if (coincide(u, ComplexF(BigFloat(0)))) {
            m.assumption1.fail(at + " coincides with 0");
            m.decomposition_valid = false;
        }
        for (const auto& c : m.masses)
            if (coincide(u, ComplexF(c))) {
                m.assumption1.fail(at + " coincides with mass point " + fmt(c));
                m.decomposition_valid = false;
            }
        for (const auto& z : m.zeros.roots)
            if (coincide(u, z)) m.assumption1.fail(at + " coincides with a zero of S_n");
    }

    // Assumption 2: zeros of phi1 off [0, inf) and off the mass points.
    for (const auto& e : m.e_poles) {
        const std::string at = "phi1_n root " + fmt(e);
        if (abs(e.im) <= coincidence_tol() && e.re >= -coincidence_tol()) m.assumption2.fail(at + " lies in [0, inf)");
        for (const auto& c : m.masses)
            if (coincide(e, ComplexF(c))) m.assumption2.fail(at + " coincides with mass point " + fmt(c));
    }

    m.ell1 = BigFloat(0);
    if (m.decomposition_valid) {
        m.r0 = residue(m, ComplexF(BigFloat(0)));
        m.ell1 = BigFloat(1) + m.r0.re;
        m.poles.push_back({PoleKind::origin, 0, ComplexF(BigFloat(0)), ComplexF(m.ell1, m.r0.im)});
        for (std::size_t j = 0; j < m.masses.size(); ++j) {
            const ComplexF r = residue(m, ComplexF(m.masses[j]));
            m.r_c.push_back(r);
            const BigFloat ell = BigFloat(2 * m.orders[j] + 3) + r.re;
            m.ell2.push_back(ell);
            m.poles.push_back({PoleKind::mass, static_cast<int>(j), ComplexF(m.masses[j]), ComplexF(ell, r.im)});
        }
        for (std::size_t i = 0; i < m.u_roots.size(); ++i) {
            const ComplexF& u = m.u_roots.roots[i];
            const ComplexF r = residue(m, u);
            m.r_u.push_back(r);
            const ComplexF ell = ComplexF(BigFloat(1)) + r;
            m.ell3.push_back(ell);
            // ell_3 = 0: P1/P2 has no pole at u, so the term is dropped.
            if (abs(ell) <= coincidence_tol()) continue;
            m.poles.push_back({PoleKind::delta_root, static_cast<int>(i), u, ell});
        }
        for (std::size_t i = 0; i < m.e_poles.size(); ++i)
            m.poles.push_back({PoleKind::phi1_root, static_cast<int>(i), m.e_poles[i], ComplexF(BigFloat(-m.ell4[i]))});

        // Assumption 3.
        const BigFloat tol = coincidence_tol();
        if (abs(m.r0.im) > tol || !(m.r0.re > BigFloat(-1))) m.assumption3.fail("r(0) = " + fmt(m.r0) + " is not > -1");
        for (std::size_t j = 0; j < m.r_c.size(); ++j)
            if (abs(m.r_c[j].im) > tol || !(m.r_c[j].re > BigFloat(-(2 * m.orders[j] + 3))))
                m.assumption3.fail("r(c) = " + fmt(m.r_c[j]) + " at c = " + fmt(m.masses[j]) + " is not > -2d-3");
        for (std::size_t i = 0; i < m.r_u.size(); ++i)
            if (abs(m.ell3[i]) > tol && (abs(m.r_u[i].im) > tol || !(m.r_u[i].re > BigFloat(-1))))
                m.assumption3.fail("r(u) = " + fmt(m.r_u[i]) + " at u = " + fmt(m.u_roots.roots[i]) + " is not > -1");
    } else {
        m.assumption3.fail("residues unavailable: psi2 has a repeated root");
    }
    return m;
}

BigFloat external_potential(const ElectrostaticModel& m, const BigFloat& w) {
    if (!m.decomposition_valid) throw Error("external potential unavailable without a simple pole decomposition");
    BigFloat acc(0);
    for (const auto& p : m.poles) acc += re_a_log(p.weight, p.location, w);
    return w / BigFloat(2) - acc / BigFloat(2);
}

BigFloat external_first(const ElectrostaticModel& m, const BigFloat& w) {
    if (!m.decomposition_valid) {
        const BigFloat p2 = m.P2(w);
        if (p2.is_zero()) throw PoleCollision("charge on a pole at " + fmt(w));
        return -m.P1(w) / (BigFloat(2) * p2);
    }
    ComplexF acc;
    for (const auto& p : m.poles) {
        const ComplexF z = ComplexF(w) - p.location;
        if (is_zero_c(z)) throw PoleCollision("charge on the pole " + fmt(p.location));
        acc += p.weight / z;
    }
    return (BigFloat(1) - acc.re) / BigFloat(2);
}

BigFloat external_second(const ElectrostaticModel& m, const BigFloat& w) {
    if (!m.decomposition_valid) return external_second_direct(m, w);
    ComplexF acc;
    for (const auto& p : m.poles) {
        const ComplexF z = ComplexF(w) - p.location;
        if (is_zero_c(z)) throw PoleCollision("charge on the pole " + fmt(p.location));
        acc += p.weight / (z * z);
    }
    return acc.re / BigFloat(2);
}

BigFloat external_second_direct(const ElectrostaticModel& m, const BigFloat& w) {
    const BigFloat p1 = m.P1(w);
    const BigFloat p2 = m.P2(w);
    if (p2.is_zero()) throw PoleCollision("charge on a pole at " + fmt(w));
    const BigFloat dp1 = derivative(m.P1)(w);
    const BigFloat dp2 = derivative(m.P2)(w);
    return -(dp1 * p2 - p1 * dp2) / (BigFloat(2) * p2 * p2);
}

BigFloat energy(const ElectrostaticModel& m, const std::vector<BigFloat>& w) {
    check_distinct(w);
    BigFloat acc(0);
    for (std::size_t k = 0; k < w.size(); ++k)
        for (std::size_t j = k + 1; j < w.size(); ++j) acc -= log(abs(w[j] - w[k]));
    for (const auto& wk : w) acc += external_potential(m, wk);
    return acc;
}

std::vector<BigFloat> gradient(const ElectrostaticModel& m, const std::vector<BigFloat>& w, kernels::Exec exec) {
    check_distinct(w);
    std::vector<BigFloat> g(w.size());
    kernels::pairwise_gradient(w, g, exec);
    for (std::size_t k = 0; k < w.size(); ++k) g[k] = external_first(m, w[k]) - g[k];
    return g;
}

Matrix<BigFloat> hessian(const ElectrostaticModel& m, const std::vector<BigFloat>& w, kernels::Exec exec) {
    check_distinct(w);
    const int n = static_cast<int>(w.size());
    Matrix<BigFloat> h(n, n);
    kernels::pairwise_hessian(w, h.data, exec);
    for (int k = 0; k < n; ++k) h(k, k) += external_second(m, w[k]);
    return h;
}

ElectrostaticReport classify(const ElectrostaticModel& m, kernels::Exec exec) {
    ElectrostaticReport r;
    r.model = m;
    r.gradient_residual = BigFloat(0);
    if (!m.zeros.all_real() || !m.zeros.all_simple()) {
        r.classification = Classification::Degenerate;
        r.diagnostics.push_back("zeros of S_n are not all real and simple");
        return r;
    }
    const std::vector<BigFloat> w = m.zeros.real_parts();
    r.gradient = gradient(m, w, exec);
    for (const auto& g : r.gradient) r.gradient_residual = max(r.gradient_residual, abs(g));

    r.hessian = hessian(m, w, exec);
    r.hessian_eigenvalues = symmetric_eigenvalues(r.hessian);

    r.sufficient_condition = true;
    const BigFloat half_tol = identity_tolerance();
    for (const auto& wk : w) {
        const BigFloat h2 = external_second(m, wk);
        r.external_second.push_back(h2);
        if (!(h2 > BigFloat(0))) r.sufficient_condition = false;
        const BigFloat direct = external_second_direct(m, wk);
        if (abs(h2 - direct) > half_tol * max(abs(direct), BigFloat(1)))
            r.diagnostics.push_back("pole decomposition and -(P1/P2)'/2 disagree at " + fmt(wk));
    }

    const BigFloat tol = coincidence_tol();
    bool degenerate = false;
    int nonpositive = 0;
    for (std::size_t i = 0; i < r.hessian_eigenvalues.size(); ++i) {
        const BigFloat& ev = r.hessian_eigenvalues[i];
        if (abs(ev) <= tol) degenerate = true;
        if (ev.sign() < 0) r.negative_indices.push_back(static_cast<int>(i) + 1);
        if (!(ev > tol)) ++nonpositive;
    }
    if (degenerate)
        r.classification = Classification::Degenerate;
    else if (r.negative_indices.empty())
        r.classification = Classification::LocalMin;
    else
        r.classification = Classification::Saddle;

    if (r.classification == Classification::Saddle) {
        std::vector<int> fixed;
        for (int i = 1; i <= nonpositive; ++i) fixed.push_back(i);
        r.conditional = conditional_equilibrium(r, fixed);
    }
    return r;
}

ConditionalResult conditional_equilibrium(const ElectrostaticReport& r, const std::vector<int>& fixed) {
    ConditionalResult c;
    c.fixed = fixed;
    const int n = r.hessian.rows;
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (std::find(fixed.begin(), fixed.end(), i + 1) == fixed.end()) keep.push_back(i);
    const int k = static_cast<int>(keep.size());
    if (k == 0) {
        c.positive_definite = true;
        return c;
    }
    Matrix<BigFloat> sub(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) sub(a, b) = r.hessian(keep[a], keep[b]);
    c.eigenvalues = symmetric_eigenvalues(sub);
    const BigFloat tol = coincidence_tol();
    c.positive_definite = std::all_of(c.eigenvalues.begin(), c.eigenvalues.end(), [&](const BigFloat& e) { return e > tol; });
    return c;
}

template ElectrostaticModel build_model(const SobolevSystem<Rational>&, const StructureBundle<Rational>&);
template ElectrostaticModel build_model(const SobolevSystem<BigFloat>&, const StructureBundle<BigFloat>&);

}  // namespace lsob
