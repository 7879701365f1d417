#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "phdiv/geometry.hpp"

namespace phdiv {

enum class InputKind { points, distances };

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,       ///< I/O or validation error
    kExitSizeLimit = 2,     ///< input larger than --max-n or the oracle bound
    kExitOracleMismatch = 3,
};

struct RunConfig {
    std::filesystem::path input_path;
    InputKind input_kind = InputKind::points;
    Metric metric = Metric::euclidean;
    bool metric_given = false;
    std::vector<double> orders{1.0, 20.0};
    std::optional<double> eps_min;
    std::optional<double> eps_max;
    double zero_tol = 1e-12;
    std::uint64_t seed = 0;
    std::size_t per_class = 250;
    std::filesystem::path output_dir = ".";
    bool oracle = false;
    std::size_t max_n = 2000;
    bool measure = false;                            ///< select: also measure each subset
    std::vector<std::filesystem::path> subset_files;  ///< mds: subsets to highlight
};

nlohmann::json config_json(const RunConfig& config);

/// Writes report.json, diagram_h0.csv and diagram_h1.csv into output_dir.
int cmd_diversity(const RunConfig& config, std::ostream& log);
/// Writes subset_{closest,farthest,random}.csv and subsets.json.
int cmd_select(const RunConfig& config, std::ostream& log);
/// Writes mds.csv and mds.svg.
int cmd_mds(const RunConfig& config, std::ostream& log);

}  // namespace phdiv
