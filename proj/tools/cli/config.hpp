#pragma once

#include <filesystem>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "tfp/graphon.hpp"
#include "tfp/mc_engine.hpp"
#include "tfp/rational.hpp"

namespace tfp::cli {

/// {"kind": "constant"|"two_block"|"rank1"|"block"|"grid", ...}. Validated.
Graphon parse_graphon(const nlohmann::json& j);
Graphon read_graphon(const std::filesystem::path& path);

/// {"model": {...}, "statistic": ..., "trials": N, "master_seed": S, "workers": W|"auto"}.
/// Relative degree files are resolved against `base_dir`.
ExperimentConfig parse_experiment(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ExperimentConfig read_experiment(const std::filesystem::path& path);

/// Exact value of "3", "-0.25", "1e-3" or "2/7".
Rational parse_exact_number(std::string_view text);

}  // namespace tfp::cli
