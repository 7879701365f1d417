#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "phdiv/diversity.hpp"
#include "phdiv/geometry.hpp"
#include "phdiv/persistence.hpp"
#include "phdiv/projection.hpp"
#include "phdiv/selection.hpp"

namespace phdiv::io {

/// Point CSV: a header row, then one row per point with d real columns and an
/// optional final column named `label` holding integer class ids.
PointCloud read_points_csv(std::istream& in);
PointCloud read_points_csv(const std::filesystem::path& path);

/// Distance CSV: n rows of n reals, no header. The result is validated.
DistanceMatrix read_distances_csv(std::istream& in);
DistanceMatrix read_distances_csv(const std::filesystem::path& path);

/// Shortest representation that round-trips; infinity prints as `inf`.
std::string format_number(double value);

/// `k,birth,death,lifetime` rows; essential intervals print death and
/// lifetime as `inf`.
std::string diagram_csv(const PersistenceDiagram& diag);

/// JSON form of a report. Keys: peh.h{0,1}.q<order>, entropy.h{0,1}.q<order>,
/// stats.h{0,1}.{min,mean,max,total,count}, vendi_score, meta.{...}.
nlohmann::json report_json(const DiversityReport& report);

/// `index,label` rows.
std::string subset_csv(const SubsetResult& subset, const std::vector<Label>& labels);
/// Reads the `index` column of a subset CSV.
std::vector<std::size_t> read_subset_indices(const std::filesystem::path& path);

/// Writes through a temporary file in the same directory, then renames.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace phdiv::io
