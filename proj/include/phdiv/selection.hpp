#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "phdiv/geometry.hpp"

namespace phdiv {

enum class SubsetKind { closest, farthest, random };

std::string_view to_string(SubsetKind kind);
SubsetKind parse_subset_kind(std::string_view name);

struct SubsetSpec {
    SubsetKind kind = SubsetKind::random;
    std::size_t per_class = 1;
    std::uint64_t seed = 0;
};

struct SubsetResult {
    std::vector<std::size_t> indices;  ///< sorted ascending
    std::map<Label, std::size_t> class_counts;
    std::size_t lower_half = 0;  ///< size of the core (closest) pool
    std::size_t upper_half = 0;  ///< size of the peripheral (farthest) pool

    friend bool operator==(const SubsetResult&, const SubsetResult&) = default;
};

/// Largest distance from each point to any other point.
/// Throws TooFewPoints for fewer than two points.
std::vector<double> eccentricity(const DistanceMatrix& dist);

/// Point indices ordered by ascending (eccentricity, index).
std::vector<std::size_t> eccentricity_ranking(const DistanceMatrix& dist);

/// Draws `per_class` points of every label present.
///
/// Points are ranked by ascending (eccentricity, index); the first floor(n/2)
/// ranks form the closest pool and the rest the farthest pool, while the
/// random kind draws from all points. Each label's candidates are taken in
/// ascending index order and sampled by a partial Fisher-Yates shuffle driven
/// by one Xoshiro256StarStar seeded with spec.seed, visiting labels in
/// ascending order.
SubsetResult select_subset(const DistanceMatrix& dist, std::span<const Label> labels,
                           const SubsetSpec& spec);

}  // namespace phdiv
