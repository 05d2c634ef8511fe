#include "lsob/report.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "lsob/errors.hpp"

namespace lsob {

namespace {

constexpr int kMinBits = 64;
constexpr int kMaxBits = 1 << 16;
constexpr int kMaxDegree = 200;
constexpr int kOracleMaxDegree = 8;

[[noreturn]] void bad(const std::string& what) { throw ConfigError(what); }

std::string require_string(const Json& j, const char* key) {
    if (!j.contains(key)) bad(std::string("missing field '") + key + "'");
    if (!j.at(key).is_string()) bad(std::string("field '") + key + "' must be a string");
    return j.at(key).get<std::string>();
}

int require_int(const Json& j, const char* key) {
    const Json& v = j.at(key);
    if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

void reject_unknown(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    for (const auto& [k, v] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || k == a;
        if (!ok) bad("unknown field '" + k + "' in " + where);
    }
}

Rational parse_exact(const std::string& text, const std::string& what) {
    try {
        return parse_rational(text);
    } catch (const std::exception&) {
        bad("cannot parse " + what + " '" + text + "'");
    }
}

std::string str(const Rational& q) { return to_string(q); }
std::string str(const BigFloat& x) { return x.to_string(); }

Json str_list(const auto& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(str(x));
    return a;
}

Json complex_json(const ComplexF& z) { return Json{{"re", str(z.re)}, {"im", str(z.im)}}; }

template <Scalar T>
Json poly_json(const Polynomial<T>& p) {
    return str_list(p.coefficients());
}

class Stopwatch {
   public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_;
};

Json header(const char* command, const RunConfig& cfg) {
    Json j;
    j["command"] = command;
    j["config"] = to_json(cfg);
    j["conventions"] = conventions();
    return j;
}

template <Scalar T>
Json masses_json(const SobolevConfig<T>& c) {
    Json a = Json::array();
    for (int j = 0; j < c.mass_count(); ++j) {
        Json lam = Json::object();
        for (const auto& [k, v] : c.masses()[j].lambdas) lam[std::to_string(k)] = str(v);
        a.push_back(Json{{"c", str(c.masses()[j].c)}, {"order", c.order(j)}, {"lambda", lam}});
    }
    return a;
}

template <Scalar T>
Json compute_impl(const RunConfig& cfg, const std::vector<int>& ns, const ReportOptions& opts) {
    SobolevSystem<T> sys(make_config<T>(cfg));
    Json out = header("compute", cfg);
    out["masses"] = masses_json(sys.config());
    Json results = Json::array();
    for (int n : ns) {
        Stopwatch sw;
        const SobolevPolynomial<T> sp = sobolev_poly(sys, n);
        Json r;
        r["n"] = n;
        r["coefficients"] = poly_json(sp.poly);
        Json d = Json::array();
        const auto& terms = sys.config().terms();
        for (std::size_t i = 0; i < terms.size(); ++i)
            d.push_back(Json{{"c", str(terms[i].c)}, {"k", terms[i].k}, {"value", str(sp.derivs_at_masses[i])}});
        r["derivatives_at_masses"] = d;
        if (n >= 1) r["sigma"] = str(sigma_from_sum(sys, sp));
        if (opts.timings) r["timings_ms"] = Json{{"total", sw.ms()}};
        results.push_back(r);
    }
    out["results"] = results;
    return out;
}

Json check_json(const CheckResult& c) {
    Json j{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

template <Scalar T>
VerifyOutcome verify_impl(const RunConfig& cfg, int n_max, const ReportOptions& opts) {
    SobolevSystem<T> sys(make_config<T>(cfg));
    VerifyOutcome vo;
    Json out = header("verify", cfg);
    out["masses"] = masses_json(sys.config());
    out["n_max"] = n_max;
    const SequentialOrderResult so = is_sequentially_ordered(sys.config());
    out["sequentially_ordered"] = so.ordered;

    auto record = [&](Json& checks, CheckResult c) {
        vo.all_pass = vo.all_pass && c.pass;
        checks.push_back(check_json(c));
    };

    std::vector<StructureBundle<T>> bundles;
    Json per_n = Json::array();
    for (int n = 1; n <= n_max + 1; ++n) {
        Stopwatch sw;
        try {
            bundles.push_back(build_bundle(sys, n));
        } catch (const Error& e) {
            if (n > n_max) break;
            Json r{{"n", n}};
            Json checks = Json::array();
            record(checks, {"build_bundle", false, e.what()});
            r["checks"] = checks;
            per_n.push_back(r);
            continue;
        }
        if (n > n_max) break;
        const StructureBundle<T>& b = bundles.back();
        Json r{{"n", n}};
        Json checks = Json::array();
        for (auto& c : identity_checks(sys, b)) record(checks, c);
        if (n <= kOracleMaxDegree) {
            const Polynomial<T> gs = gram_schmidt_oracle(sys, n);
            const bool eq = is_exact_v<T> ? gs == b.S_n : negligible(gs - b.S_n, sup_norm(b.S_n));
            record(checks, {"gram_schmidt_oracle", eq, {}});
        }
        r["checks"] = checks;

        Json ledger = Json::array();
        for (const auto& e : lcoef_ledger(sys, b)) {
            vo.all_pass = vo.all_pass && e.pass;
            ledger.push_back(Json{{"name", e.name},
                                  {"expected_degree", e.expected.degree},
                                  {"expected_leading", str(e.expected.leading)},
                                  {"actual_degree", e.actual.degree},
                                  {"actual_leading", str(e.actual.leading)},
                                  {"pass", e.pass}});
        }
        r["ledger"] = ledger;
        r["sigma"] = str(b.sigma);
        if (opts.timings) r["timings_ms"] = Json{{"total", sw.ms()}};
        per_n.push_back(r);
    }

    // Recurrence through S_{n-1}, S_n, S_{n+1} for n = 1..n_max.
    for (std::size_t i = 0; i + 1 < bundles.size(); ++i) {
        const auto& bn = bundles[i];
        const auto& bn1 = bundles[i + 1];
        if (bn1.n != bn.n + 1) continue;
        const Polynomial<T> res = ttrr_residual(bn, bn1);
        const bool ok = negligible(res, T(sup_norm(bn1.q4) * sup_norm(bn.q0) * sup_norm(bn1.S_n)));
        for (auto& r : per_n)
            if (r["n"] == bn.n) record(r["checks"], {"three_term_recurrence", ok, {}});
    }

    Json chain{{"n", n_max}};
    try {
        raise_from_constant(sys, n_max);
        chain["pass"] = true;
    } catch (const Error& e) {
        chain["pass"] = false;
        chain["detail"] = e.what();
        vo.all_pass = false;
    }
    out["results"] = per_n;
    out["raising_chain"] = chain;
    out["all_pass"] = vo.all_pass;
    vo.report = std::move(out);
    return vo;
}

template <Scalar T>
ElectroOutcome electro_impl(const RunConfig& cfg, const std::vector<int>& ns, const ReportOptions& opts) {
    SobolevSystem<T> sys(make_config<T>(cfg));
    ElectroOutcome eo;
    Json out = header("electro", cfg);
    out["masses"] = masses_json(sys.config());
    Json results = Json::array();
    for (int n : ns) {
        if (n < 1) bad("electro needs n >= 1");
        Stopwatch sw;
        const StructureBundle<T> b = build_bundle(sys, n);
        const double t_structure = sw.ms();
        const ElectrostaticModel m = build_model(sys, b);
        const double t_model = sw.ms();
        ElectrostaticReport rep = classify(m, opts.exec);
        Json r = to_json(rep);
        const ZeroLocation loc = zero_location_check(sys.config(), m.zeros);
        Json attracted = Json::array();
        for (const auto& z : loc.attracted) attracted.push_back(z ? complex_json(*z) : Json());
        r["zero_location"] = Json{{"outside_count", loc.outside_count},
                                  {"positive_count", loc.positive_count},
                                  {"one_per_mass", loc.one_per_mass},
                                  {"rest_positive", loc.rest_positive},
                                  {"attracted", attracted}};
        if (opts.timings)
            r["timings_ms"] = Json{{"structure", t_structure}, {"model", t_model - t_structure}, {"classify", sw.ms() - t_model}};
        results.push_back(r);
        eo.reports.push_back(std::move(rep));
    }
    out["results"] = results;
    eo.report = std::move(out);
    return eo;
}

}  // namespace

std::vector<int> RunConfig::degrees() const {
    std::vector<int> out;
    if (n_range)
        for (int k = n_range->first; k <= n_range->second; ++k) out.push_back(k);
    else if (n)
        out.push_back(*n);
    return out;
}

RunConfig parse_run_config(const Json& j) {
    if (!j.is_object()) bad("configuration must be a JSON object");
    reject_unknown(j, {"name", "alpha", "masses", "mode", "precision_bits", "n", "n_range"}, "configuration");
    RunConfig cfg;
    if (j.contains("name")) cfg.name = require_string(j, "name");
    cfg.alpha = require_string(j, "alpha");
    const Rational alpha = parse_exact(cfg.alpha, "alpha");
    if (!(alpha > -1)) bad("alpha must be > -1, got " + cfg.alpha);

    if (!j.contains("masses")) bad("missing field 'masses'");
    if (!j.at("masses").is_array()) bad("field 'masses' must be an array");
    std::set<std::pair<Rational, int>> seen;
    for (const Json& m : j.at("masses")) {
        if (!m.is_object()) bad("each mass entry must be an object");
        reject_unknown(m, {"c", "order", "lambda"}, "mass entry");
        if (!m.contains("order")) bad("missing field 'order' in mass entry");
        MassSpec s{require_string(m, "c"), require_int(m, "order"), require_string(m, "lambda")};
        const Rational c = parse_exact(s.c, "c");
        const Rational lam = parse_exact(s.lambda, "lambda");
        if (!(c < 0)) bad("mass point c must be < 0, got " + s.c);
        if (s.order < 0) bad("derivative order must be >= 0");
        if (lam < 0) bad("lambda must be >= 0, got " + s.lambda);
        if (!seen.insert({c, s.order}).second) bad("duplicate mass entry at c = " + s.c + ", order " + std::to_string(s.order));
        cfg.masses.push_back(std::move(s));
    }

    if (j.contains("mode")) {
        const std::string mode = require_string(j, "mode");
        if (mode == "rational")
            cfg.mode = Mode::rational;
        else if (mode == "float")
            cfg.mode = Mode::floating;
        else
            bad("mode must be 'rational' or 'float', got '" + mode + "'");
    }
    if (cfg.mode == Mode::rational && !is_integer(alpha))
        bad("rational mode needs an integer alpha (exact Gamma values); use mode 'float'");

    if (j.contains("precision_bits")) {
        cfg.precision_bits = require_int(j, "precision_bits");
        if (cfg.precision_bits < kMinBits || cfg.precision_bits > kMaxBits)
            bad("precision_bits must lie in [" + std::to_string(kMinBits) + ", " + std::to_string(kMaxBits) + "]");
    }
    if (j.contains("n")) {
        cfg.n = require_int(j, "n");
        if (*cfg.n < 0 || *cfg.n > kMaxDegree) bad("n out of range");
    }
    if (j.contains("n_range")) {
        const Json& r = j.at("n_range");
        if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
            bad("n_range must be [lo, hi]");
        const int lo = r[0].get<int>();
        const int hi = r[1].get<int>();
        if (lo < 0 || hi < lo || hi > kMaxDegree) bad("n_range out of range");
        cfg.n_range = std::pair{lo, hi};
    }
    if (cfg.n && cfg.n_range) bad("give either n or n_range, not both");
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open configuration '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        bad("malformed JSON in '" + path + "': " + e.what());
    }
    return parse_run_config(j);
}

Json to_json(const RunConfig& cfg) {
    Json j;
    if (!cfg.name.empty()) j["name"] = cfg.name;
    j["alpha"] = cfg.alpha;
    Json ms = Json::array();
    for (const auto& m : cfg.masses) ms.push_back(Json{{"c", m.c}, {"order", m.order}, {"lambda", m.lambda}});
    j["masses"] = ms;
    j["mode"] = cfg.mode == Mode::rational ? "rational" : "float";
    j["precision_bits"] = cfg.precision_bits;
    if (cfg.n) j["n"] = *cfg.n;
    if (cfg.n_range) j["n_range"] = Json::array({cfg.n_range->first, cfg.n_range->second});
    return j;
}

std::optional<int> precision_from_env() {
    const char* v = std::getenv("LSOB_PRECISION_BITS");
    if (v == nullptr || *v == '\0') return std::nullopt;
    char* end = nullptr;
    const long bits = std::strtol(v, &end, 10);
    if (*end != '\0' || bits < kMinBits || bits > kMaxBits)
        bad(std::string("LSOB_PRECISION_BITS must be an integer in [") + std::to_string(kMinBits) + ", " +
            std::to_string(kMaxBits) + "], got '" + v + "'");
    return static_cast<int>(bits);
}

template <Scalar T>
SobolevConfig<T> make_config(const RunConfig& cfg) {
    std::map<Rational, MassPoint<T>> by_c;
    for (const auto& m : cfg.masses) {
        const Rational lam = parse_rational(m.lambda);
        if (lam == 0) continue;
        const Rational c = parse_rational(m.c);
        auto& mp = by_c[c];
        mp.c = parse_scalar<T>(m.c);
        mp.lambdas[m.order] = parse_scalar<T>(m.lambda);
    }
    std::vector<MassPoint<T>> masses;
    for (auto& [c, mp] : by_c) masses.push_back(std::move(mp));
    return SobolevConfig<T>(parse_scalar<T>(cfg.alpha), std::move(masses));
}

template SobolevConfig<Rational> make_config(const RunConfig&);
template SobolevConfig<BigFloat> make_config(const RunConfig&);

Json run_compute(const RunConfig& cfg, const std::vector<int>& ns, const ReportOptions& opts) {
    PrecisionScope scope(cfg.precision_bits);
    return cfg.mode == Mode::rational ? compute_impl<Rational>(cfg, ns, opts) : compute_impl<BigFloat>(cfg, ns, opts);
}

VerifyOutcome run_verify(const RunConfig& cfg, int n_max, const ReportOptions& opts) {
    if (n_max < 1) bad("verify needs n_max >= 1");
    PrecisionScope scope(cfg.precision_bits);
    return cfg.mode == Mode::rational ? verify_impl<Rational>(cfg, n_max, opts) : verify_impl<BigFloat>(cfg, n_max, opts);
}

ElectroOutcome run_electro(const RunConfig& cfg, const std::vector<int>& ns, const ReportOptions& opts) {
    PrecisionScope scope(cfg.precision_bits);
    return cfg.mode == Mode::rational ? electro_impl<Rational>(cfg, ns, opts) : electro_impl<BigFloat>(cfg, ns, opts);
}

void write_csv(std::ostream& os, const ElectrostaticReport& r) {
    os << "index,zero,gradient_component,eigenvalue\n";
    const auto& zs = r.model.zeros.roots;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        os << i + 1 << ',' << zs[i].re.to_string(20) << ',';
        if (i < r.gradient.size()) os << r.gradient[i].to_string(6);
        os << ',';
        if (i < r.hessian_eigenvalues.size()) os << r.hessian_eigenvalues[i].to_string(20);
        os << '\n';
    }
}

Json to_json(const ZeroSet& zs) {
    Json roots = Json::array();
    for (const auto& z : zs.roots) roots.push_back(complex_json(z));
    Json simple = Json::array();
    for (bool s : zs.simple) simple.push_back(s);
    return Json{{"roots", roots},
                {"residual_bound", str(zs.residual_bound)},
                {"simple", simple},
                {"all_real", zs.all_real()},
                {"converged", zs.converged},
                {"sweeps", zs.sweeps}};
}

Json to_json(const ElectrostaticReport& r) {
    const ElectrostaticModel& m = r.model;
    Json j;
    j["n"] = m.n;
    j["zeros"] = to_json(m.zeros);
    j["delta_roots"] = to_json(m.u_roots);
    j["phi1_roots"] = to_json(m.e_roots);

    Json poles = Json::array();
    for (const auto& p : m.poles)
        poles.push_back(Json{{"kind", pole_kind_name(p.kind)},
                             {"index", p.index},
                             {"location", complex_json(p.location)},
                             {"weight", complex_json(p.weight)}});
    j["poles"] = poles;
    j["decomposition_valid"] = m.decomposition_valid;

    Json ell;
    ell["ell1"] = str(m.ell1);
    ell["ell2"] = str_list(m.ell2);
    Json ell3 = Json::array();
    for (const auto& e : m.ell3) ell3.push_back(complex_json(e));
    ell["ell3"] = ell3;
    Json ell4 = Json::array();
    for (std::size_t i = 0; i < m.e_poles.size(); ++i)
        ell4.push_back(Json{{"location", complex_json(m.e_poles[i])}, {"multiplicity", m.ell4[i]}});
    ell["ell4"] = ell4;
    j["exponents"] = ell;

    Json rv;
    if (m.decomposition_valid) rv["origin"] = complex_json(m.r0);
    Json rc = Json::array();
    for (const auto& v : m.r_c) rc.push_back(complex_json(v));
    Json ru = Json::array();
    for (const auto& v : m.r_u) ru.push_back(complex_json(v));
    rv["masses"] = rc;
    rv["delta_roots"] = ru;
    j["r_values"] = rv;

    auto assumption = [](const AssumptionStatus& a) { return Json{{"holds", a.holds}, {"diagnostics", a.diagnostics}}; };
    j["assumptions"] = Json{{"1", assumption(m.assumption1)}, {"2", assumption(m.assumption2)}, {"3", assumption(m.assumption3)}};

    j["gradient_residual"] = str(r.gradient_residual);
    j["gradient"] = str_list(r.gradient);
    j["hessian_eigenvalues"] = str_list(r.hessian_eigenvalues);
    j["classification"] = classification_name(r.classification);
    j["negative_indices"] = r.negative_indices;
    j["external_second"] = str_list(r.external_second);
    j["sufficient_condition"] = r.sufficient_condition;
    if (r.conditional)
        j["conditional"] = Json{{"fixed", r.conditional->fixed},
                                {"eigenvalues", str_list(r.conditional->eigenvalues)},
                                {"verdict", r.conditional->positive_definite ? "positive definite" : "not positive definite"}};
    if (m.decomposition_valid && m.zeros.all_real() && m.zeros.all_simple()) {
        try {
            j["energy"] = str(energy(m, m.zeros.real_parts()));
        } catch (const Error& e) {
            j["energy_unavailable"] = e.what();
        }
    }
    j["diagnostics"] = r.diagnostics;
    return j;
}

Json conventions() {
    return Json{
        {"field_decomposition", "P1/P2 = -1 + sum_p A_p/(x - p); A(0) = ell1, A(c_j) = ell2_j, A(u_i) = ell3_i, A(e_j) = -ell4_j"},
        {"external_potential", "h(w) = w/2 - 1/2 sum_p Re[A_p Log(w - p)]; h' = -P1/(2 P2)"},
        {"residue", "r(p) = psi1(p)/psi2'(p), psi2 = x rho_N delta_n, psi1 = phi2 + phi3 + psi2"},
        {"ladder", "lowering (q2 + q0 D)/q1, raising (q3 + q0 D)/q4; q0 = x Delta_n, q1 = Delta1, q2 = x rho' delta + Delta2, q3 = x rho' delta + Delta3, q4 = V3 W2 - W3 V2"},
        {"recurrence", "q4_{n+1} q0_n S_{n+1} = (q3_{n+1} q0_n - q2_n q0_{n+1}) S_n + q1_n q0_{n+1} S_{n-1}"},
        {"removable_poles", "delta_n roots with ell3 = 0 are dropped from the pole list"},
    };
}

}  // namespace lsob
