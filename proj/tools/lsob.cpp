// lsob: Laguerre-Sobolev polynomials, structure checks and electrostatics.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "lsob/errors.hpp"
#include "lsob/report.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitCompute = 3;

struct Common {
    std::string config;
    std::optional<int> n;
    std::string out;
    bool timings = false;
};

lsob::RunConfig load(const Common& c) {
    lsob::RunConfig cfg = lsob::load_run_config(c.config);
    if (auto bits = lsob::precision_from_env()) cfg.precision_bits = *bits;
    if (c.n) {
        if (*c.n < 0) throw lsob::ConfigError("--n must be >= 0");
        cfg.n = c.n;
        cfg.n_range.reset();
    }
    return cfg;
}

std::vector<int> degrees(const lsob::RunConfig& cfg) {
    auto ns = cfg.degrees();
    if (ns.empty()) throw lsob::ConfigError("no degree given: pass --n or set n / n_range in the configuration");
    return ns;
}

void emit(const lsob::Json& j, const std::string& path) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw lsob::ConfigError("cannot write '" + path + "'");
    out << text;
}

void add_common(CLI::App* sub, Common& c, bool with_n) {
    sub->add_option("--config", c.config, "run configuration (JSON)")->required()->check(CLI::ExistingFile);
    if (with_n) sub->add_option("--n", c.n, "degree (overrides n / n_range)");
    sub->add_option("--out", c.out, "write the JSON report here instead of stdout");
    sub->add_flag("--timings", c.timings, "include wall-clock timings (breaks byte-identical output)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laguerre-Sobolev orthogonal polynomials"};
    app.require_subcommand(1);
    bool parallel = false;
    app.add_flag("--parallel", parallel, "use the OpenMP kernels");

    Common compute_opts, verify_opts, electro_opts;
    int n_max = -1;
    std::string csv;

    auto* compute = app.add_subcommand("compute", "S_n, derivative values at the mass points and sigma_n");
    add_common(compute, compute_opts, true);

    auto* verify = app.add_subcommand("verify", "identity suite for n = 1..n_max; nonzero exit on any failure");
    add_common(verify, verify_opts, false);
    verify->add_option("--n-max", n_max, "largest degree checked");

    auto* electro = app.add_subcommand("electro", "zeros, external field and Hessian classification");
    add_common(electro, electro_opts, true);
    electro->add_option("--csv", csv, "plot data: index,zero,gradient_component,eigenvalue");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    lsob::ReportOptions ro;
    ro.exec = parallel ? lsob::kernels::Exec::parallel : lsob::kernels::Exec::serial;
    try {
        if (*compute) {
            ro.timings = compute_opts.timings;
            const auto cfg = load(compute_opts);
            emit(lsob::run_compute(cfg, degrees(cfg), ro), compute_opts.out);
        } else if (*verify) {
            ro.timings = verify_opts.timings;
            const auto cfg = load(verify_opts);
            int nm = n_max;
            if (nm < 0) {
                auto ns = cfg.degrees();
                if (ns.empty()) throw lsob::ConfigError("no degree given: pass --n-max or set n in the configuration");
                nm = ns.back();
            }
            if (nm < 1) throw lsob::ConfigError("--n-max must be >= 1");
            const auto vo = lsob::run_verify(cfg, nm, ro);
            emit(vo.report, verify_opts.out);
            if (!vo.all_pass) {
                std::cerr << "lsob: verification failed\n";
                return kExitCompute;
            }
        } else if (*electro) {
            ro.timings = electro_opts.timings;
            const auto cfg = load(electro_opts);
            const auto ns = degrees(cfg);
            if (!csv.empty() && ns.size() != 1) throw lsob::ConfigError("--csv needs a single degree");
            const auto eo = lsob::run_electro(cfg, ns, ro);
            emit(eo.report, electro_opts.out);
            if (!csv.empty()) {
                std::ofstream out(csv);
                if (!out) throw lsob::ConfigError("cannot write '" + csv + "'");
                lsob::write_csv(out, eo.reports.front());
            }
        }
    } catch (const lsob::ConfigError& e) {
        std::cerr << "lsob: configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "lsob: computation error: " << e.what() << "\n";
        return kExitCompute;
    }
    return 0;
}
