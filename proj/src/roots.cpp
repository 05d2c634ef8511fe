#include "lsob/roots.hpp"

#include <algorithm>
#include <cmath>

#include "lsob/errors.hpp"

namespace lsob {

namespace {

BigFloat pow2(long e) { return ldexp(BigFloat(1), e); }

// p(z) with the running bound sum |a_i| |z|^i used as the rounding floor.
void eval_with_floor(std::span<const BigFloat> c, const ComplexF& z, ComplexF& value, BigFloat& floor) {
    value = ComplexF();
    floor = BigFloat(0);
    const BigFloat az = abs(z);
    for (std::size_t i = c.size(); i-- > 0;) {
        value = value * z + ComplexF(c[i]);
        floor = floor * az + abs(c[i]);
    }
}

ComplexF round_to(const ComplexF& z, mpfr_prec_t prec) { return ComplexF(BigFloat(z.re, prec), BigFloat(z.im, prec)); }

bool less_re_im(const ComplexF& a, const ComplexF& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

// Real roots of odd-degree factors and conjugate pairs of the rest.
void pair_conjugates(std::vector<ComplexF>& r) {
    std::vector<std::size_t> upper, lower;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i].im.sign() > 0) upper.push_back(i);
        if (r[i].im.sign() < 0) lower.push_back(i);
    }
    std::vector<bool> used(r.size(), false);
    for (std::size_t u : upper) {
        std::size_t best = r.size();
        BigFloat best_d;
        for (std::size_t l : lower) {
            if (used[l]) continue;
            BigFloat dist = abs(r[u] - conj(r[l]));
            if (best == r.size() || dist < best_d) {
                best = l;
                best_d = dist;
            }
        }
        if (best == r.size()) continue;
        used[best] = true;
        ComplexF mid((r[u].re + r[best].re) / BigFloat(2), (r[u].im - r[best].im) / BigFloat(2));
        r[u] = mid;
        r[best] = conj(mid);
    }
}

}  // namespace

bool ZeroSet::all_real() const {
    return std::all_of(roots.begin(), roots.end(), [](const ComplexF& z) { return z.im.is_zero(); });
}

bool ZeroSet::all_simple() const {
    return std::all_of(simple.begin(), simple.end(), [](bool s) { return s; });
}

std::vector<BigFloat> ZeroSet::real_parts() const {
    std::vector<BigFloat> out;
    out.reserve(roots.size());
    for (const auto& z : roots) out.push_back(z.re);
    return out;
}

ZeroSet find_roots(const Polynomial<BigFloat>& p, std::string label, const RootOptions& opts) {
    const int n = p.degree();
    if (n < 1) throw std::invalid_argument("find_roots needs degree >= 1");
    const mpfr_prec_t prec = BigFloat::default_precision();
    const mpfr_prec_t wide = 2 * prec;

    ZeroSet zs;
    zs.label = std::move(label);
    std::vector<ComplexF> z(static_cast<std::size_t>(n));
    {
        PrecisionScope scope(wide);
        // Monic copy at doubled precision.
        std::vector<BigFloat> c;
        const BigFloat lead(p.leading(), wide);
        for (const BigFloat& v : p.coefficients()) c.push_back(BigFloat(v, wide) / lead);

        // Fujiwara bound on the root moduli.
        BigFloat radius(0);
        for (int k = 1; k <= n; ++k) {
            BigFloat a = abs(c[static_cast<std::size_t>(n - k)]);
            if (k == n) a /= BigFloat(2);
            if (a.is_zero()) continue;
            BigFloat r = exp(log(a) / BigFloat(k));
            radius = max(radius, r);
        }
        radius *= BigFloat(2);
        if (radius.is_zero()) radius = BigFloat(1);
        const BigFloat two_pi = BigFloat(2) * BigFloat::pi();
        for (int k = 0; k < n; ++k) {
            BigFloat theta = two_pi * BigFloat(k) / BigFloat(n) + BigFloat(0.4);
            z[k] = ComplexF(radius * BigFloat(std::cos(theta.to_double())), radius * BigFloat(std::sin(theta.to_double())));
        }

        const BigFloat eps = pow2(-static_cast<long>(wide) + 4);
        std::vector<ComplexF> corr(z.size());
        bool done = false;
        int sweep = 0;
        while (sweep < opts.max_sweeps && !done) {
            ++sweep;
            kernels::aberth_corrections(c, z, corr, opts.exec);
            done = true;
            for (std::size_t i = 0; i < z.size(); ++i) {
                z[i] -= corr[i];
                ComplexF value;
                BigFloat floor;
                eval_with_floor(c, z[i], value, floor);
                const bool small_step = abs(corr[i]) <= eps * (BigFloat(1) + abs(z[i]));
                const bool at_floor = abs(value) <= eps * floor;
                if (!small_step && !at_floor) done = false;
            }
        }
        zs.sweeps = sweep;
        zs.converged = done;
    }

    // Newton polishing at working precision.
    std::vector<BigFloat> cw;
    for (const BigFloat& v : p.coefficients()) cw.push_back(BigFloat(v, prec));
    for (auto& zi : z) {
        zi = round_to(zi, prec);
        ComplexF value, deriv;
        kernels::horner_with_derivative(cw, zi, value, deriv);
        for (int it = 0; it < 4; ++it) {
            if ((value.re.is_zero() && value.im.is_zero()) || (deriv.re.is_zero() && deriv.im.is_zero())) break;
            ComplexF cand = zi - value / deriv;
            ComplexF cv, cd;
            kernels::horner_with_derivative(cw, cand, cv, cd);
            if (!(abs(cv) < abs(value))) break;
            zi = cand;
            value = cv;
            deriv = cd;
        }
    }

    const BigFloat snap = pow2(-static_cast<long>(prec / 4));
    for (auto& zi : z)
        if (abs(zi.im) < snap * (BigFloat(1) + abs(zi.re))) zi.im = BigFloat(0);
    pair_conjugates(z);
    std::sort(z.begin(), z.end(), less_re_im);

    zs.roots = z;
    zs.residual_bound = BigFloat(0);
    const BigFloat pnorm = sup_norm(p);
    const BigFloat half = pow2(-static_cast<long>(prec / 2));
    std::vector<BigFloat> dmag;
    for (const auto& zi : z) {
        ComplexF value, deriv;
        kernels::horner_with_derivative(cw, zi, value, deriv);
        zs.residuals.push_back(abs(value));
        dmag.push_back(abs(deriv));
        zs.residual_bound = max(zs.residual_bound, abs(value));
        BigFloat scale = pnorm;
        const BigFloat m = max(BigFloat(1), abs(zi));
        for (int k = 0; k < n; ++k) scale *= m;
        if (abs(value) > half * scale) zs.converged = false;
    }
    zs.min_separation = BigFloat(0);
    for (std::size_t i = 0; i < z.size(); ++i) {
        BigFloat sep;
        bool first = true;
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (i == j) continue;
            BigFloat dist = abs(z[i] - z[j]);
            if (first || dist < sep) sep = dist;
            first = false;
        }
        zs.simple.push_back((first || sep > snap) && dmag[i] > zs.residual_bound);
    }
    if (z.size() > 1) {
        BigFloat m = abs(z[0] - z[1]);
        for (std::size_t i = 0; i < z.size(); ++i)
            for (std::size_t j = i + 1; j < z.size(); ++j) m = min(m, abs(z[i] - z[j]));
        zs.min_separation = m;
    }

    if (opts.strict && !zs.converged)
        throw NoConvergence("root finder did not converge for " + (zs.label.empty() ? "polynomial" : zs.label) +
                            " after " + std::to_string(zs.sweeps) + " sweeps");
    return zs;
}

ZeroSet find_roots(const Polynomial<Rational>& p, std::string label, const RootOptions& opts) {
    // Convert at doubled precision so the iteration sees exact-as-possible data.
    const mpfr_prec_t prec = BigFloat::default_precision();
    std::vector<BigFloat> c;
    {
        PrecisionScope scope(2 * prec);
        for (const Rational& v : p.coefficients()) c.emplace_back(v);
    }
    return find_roots(Polynomial<BigFloat>(std::move(c)), std::move(label), opts);
}

int real_roots_in(const ZeroSet& zs, const std::optional<BigFloat>& a, const std::optional<BigFloat>& b) {
    int count = 0;
    for (const auto& z : zs.roots) {
        if (!z.im.is_zero()) continue;
        if (a && !(z.re > *a)) continue;
        if (b && !(z.re < *b)) continue;
        ++count;
    }
    return count;
}

template <Scalar T>
ZeroLocation zero_location_check(const SobolevConfig<T>& cfg, const ZeroSet& zs) {
    ZeroLocation out;
    const int N = cfg.mass_count();
    out.attracted.assign(static_cast<std::size_t>(N), std::nullopt);
    std::vector<ComplexF> outside;
    for (const auto& z : zs.roots) {
        if (z.im.is_zero() && z.re.sign() > 0)
            ++out.positive_count;
        else
            outside.push_back(z);
    }
    out.outside_count = static_cast<int>(outside.size());
    out.rest_positive = out.positive_count == static_cast<int>(zs.size()) - N;

    // Masses in increasing position, matched in order to the outside zeros.
    std::vector<int> order(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) order[j] = j;
    std::vector<BigFloat> cs;
    for (const auto& m : cfg.masses()) cs.push_back(to_bigfloat(m.c));
    std::sort(order.begin(), order.end(), [&](int a, int b) { return cs[a] < cs[b]; });

    if (static_cast<int>(outside.size()) == N) {
        out.one_per_mass = true;
        for (int i = 0; i < N; ++i) {
            const int j = order[i];
            const ComplexF& z = outside[i];
            const BigFloat to_mass = abs(z - ComplexF(cs[j]));
            // Distance to [0, inf).
            const BigFloat to_axis = z.re.sign() >= 0 ? abs(z.im) : abs(z);
            if (to_mass < to_axis)
                out.attracted[j] = z;
            else
                out.one_per_mass = false;
        }
    }
    return out;
}

template ZeroLocation zero_location_check(const SobolevConfig<Rational>&, const ZeroSet&);
template ZeroLocation zero_location_check(const SobolevConfig<BigFloat>&, const ZeroSet&);

}  // namespace lsob
