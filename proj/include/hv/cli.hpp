#pragma once

#include "hv/serialize.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hv::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsageError = 2 };

struct ProbeSpec {
    Polynomial seed;
    std::optional<int> degree_cap;
    int iter_cap = 50;
};

/// Everything a run reads from --config and the inline flags.
///
/// Keys: "algebra", "module", "window", "grid" ("default" or "config"),
/// "suites", "probes", "fixture" ("reference" or "corrupted"), "seed".
/// Unknown keys are rejected at every level.
struct RunConfig {
    AlgebraParams algebra{Rational(0), Rational(0), 1};
    ModuleParams module;
    CheckWindow window;
    bool grid_from_config = false;
    std::vector<std::string> suites;
    std::vector<ProbeSpec> probes;
    bool corrupted = false;
    std::uint64_t seed = 20240601;

    Module build_module() const { return Module(algebra, module); }
};

RunConfig parse_config(const Json& j);

/// Command-line values that override the config file.
struct Overrides {
    std::optional<std::string> a, b, lambda, alpha, beta, gamma, kappa; ///< kappa: "i:v,i:v,..."
    std::optional<int> eps;
    std::optional<std::uint64_t> seed;
    std::optional<int> i_min, i_max, m_max, deg_max;
    std::optional<std::string> fixture;
    std::vector<std::string> suites;
};

/// Reads the config file (if any), then applies the overrides and fills the
/// default grid unless the grid comes from the config.
RunConfig resolve_config(const std::optional<std::string>& config_path, const Overrides& o);

struct Result {
    int exit_code = kPass;
    std::string output;
};

Result cmd_bracket(const RunConfig& cfg, const std::string& x, const std::string& y, bool json);
Result cmd_act(const RunConfig& cfg, const std::string& x, const std::string& f, bool json);
Result cmd_verify(const RunConfig& cfg, bool json);
Result cmd_probe(const RunConfig& cfg, bool json);
Result cmd_recover(const RunConfig& cfg, bool json);
Result cmd_gen_check(const RunConfig& cfg, bool json);

/// Runs fn, mapping parse/config/domain errors to exit code 2.
Result guarded(const std::function<Result()>& fn);

} // namespace hv::cli
