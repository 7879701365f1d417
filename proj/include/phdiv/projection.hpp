#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phdiv/geometry.hpp"

namespace phdiv {

struct Embedding {
    std::size_t dim = 2;
    std::vector<double> coords;       ///< row-major, n x dim
    std::vector<double> eigenvalues;  ///< the `dim` leading eigenvalues, after zeroing
    /// sqrt(sum of squared discarded eigenvalues / sum of all squared eigenvalues).
    double stress = 0.0;
    /// Set when the centered Gram matrix has significant negative eigenvalues,
    /// i.e. the distances are not euclidean.
    bool non_euclidean = false;

    std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
    std::span<const double> point(std::size_t i) const { return {coords.data() + i * dim, dim}; }
};

/// Classical (Torgerson) multidimensional scaling into `dim` (1..3) axes.
/// Each axis is oriented so its largest-magnitude coordinate is positive.
Embedding classical_mds(const DistanceMatrix& dist, std::size_t dim = 2);

/// One marker per point for the scatter plot.
struct PlotPoint {
    double x = 0.0;
    double y = 0.0;
    std::optional<Label> label;
    std::string group;  ///< subset kind, or empty for points in no subset
};

/// 800x600 SVG scatter plot with one marker shape per group and a legend.
std::string render_scatter_svg(std::span<const PlotPoint> points, const std::string& title);

}  // namespace phdiv
