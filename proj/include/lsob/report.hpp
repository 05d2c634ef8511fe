#ifndef LSOB_REPORT_HPP
#define LSOB_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lsob/electrostatics.hpp"

namespace lsob {

using Json = nlohmann::ordered_json;

enum class Mode { rational, floating };

struct MassSpec {
    std::string c;
    int order = 0;
    std::string lambda;
};

/// A run configuration, e.g.
///   {"alpha": "11", "masses": [{"c": "-2", "order": 1, "lambda": "1"}],
///    "mode": "rational", "precision_bits": 256, "n": 12}
/// Scalars are strings so rationals survive the round trip.
struct RunConfig {
    std::string name;
    std::string alpha;
    std::vector<MassSpec> masses;
    Mode mode = Mode::rational;
    int precision_bits = 256;
    std::optional<int> n;
    std::optional<std::pair<int, int>> n_range;

    /// Degrees selected by n / n_range, ascending.
    std::vector<int> degrees() const;
};

/// Strict schema check; unknown keys, wrong types and out-of-range values
/// throw ConfigError.
RunConfig parse_run_config(const Json& j);
RunConfig load_run_config(const std::string& path);
Json to_json(const RunConfig& cfg);

/// Reads LSOB_PRECISION_BITS when set; ConfigError if it is not a valid bit count.
std::optional<int> precision_from_env();

/// Groups mass entries by location; entries with lambda = 0 are dropped
/// and a location left without positive weights disappears.
template <Scalar T>
SobolevConfig<T> make_config(const RunConfig& cfg);

struct ReportOptions {
    bool timings = false;
    kernels::Exec exec = kernels::Exec::serial;
};

/// S_n coefficients, derivative values at the mass points and sigma_n.
Json run_compute(const RunConfig& cfg, const std::vector<int>& ns, const ReportOptions& opts = {});

struct VerifyOutcome {
    Json report;
    bool all_pass = true;
};

/// Identity suite, leading-coefficient ledger, recurrence, oracle (n <= 8)
/// and raising chain for n = 1..n_max.
VerifyOutcome run_verify(const RunConfig& cfg, int n_max, const ReportOptions& opts = {});

struct ElectroOutcome {
    Json report;
    /// One per degree, in the order of `ns`.
    std::vector<ElectrostaticReport> reports;
};

ElectroOutcome run_electro(const RunConfig& cfg, const std::vector<int>& ns, const ReportOptions& opts = {});

/// index,zero,gradient_component,eigenvalue; one row per charge.
void write_csv(std::ostream& os, const ElectrostaticReport& r);

Json to_json(const ZeroSet& zs);
Json to_json(const ElectrostaticReport& r);

/// Resolved sign conventions embedded in every report.
Json conventions();

}  // namespace lsob

#endif  // LSOB_REPORT_HPP
