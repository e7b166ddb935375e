#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliff/subspace.hpp"

namespace cliff {

/// Configuration or schema problem; the message carries the JSON path.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultDimCap = 10;
inline constexpr int kHardDimCap = 14;
inline constexpr int kDefaultCoeffBound = 5;
inline constexpr int kDefaultRandomCount = 25;
inline constexpr std::uint64_t kDefaultSeed = 1;

/// The check names, in report order.
const std::vector<std::string>& all_check_names();

struct RandomSpec {
    int count = 0;
    std::vector<int> dims;  // allowed subspace dimensions; empty means 0..n
    std::uint64_t seed = kDefaultSeed;
};

struct RunConfig {
    int dim = 0;
    std::vector<std::string> checks;  // sorted, deduplicated
    std::vector<std::vector<std::vector<std::string>>> subspace_literals;
    RandomSpec random;
    int coeff_bound = kDefaultCoeffBound;
    int dim_cap = kDefaultDimCap;
    std::optional<std::string> report_path;

    /// Literals parsed against `dim`.
    std::vector<Subspace> parsed_subspaces() const;
};

/// Parses and validates a JSON config document. Throws ConfigError with
/// the offending path on schema violations, dimension-cap breaches and
/// malformed scalars.
RunConfig parse_config(const std::string& text);

/// Executes one config: every requested check over the literal and the
/// seeded random subspaces. Records are ordered by check name, then
/// input index.
nlohmann::ordered_json run(const RunConfig& config);

/// Executes several configs and assembles the report document
/// {"tool", "rng", "runs": [...], "summary": {"total","failed"}}.
nlohmann::ordered_json run_suite(const std::vector<RunConfig>& configs);

/// Number of failed records in a report produced by run_suite.
int report_failures(const nlohmann::ordered_json& report);

/// One human-readable line per record plus a summary line.
std::string human_summary(const nlohmann::ordered_json& report);

/// Deep-copies the report with all elapsed_ms fields removed, for
/// byte-stable comparisons between runs.
nlohmann::ordered_json scrub_timing(const nlohmann::ordered_json& report);

}  // namespace cliff
