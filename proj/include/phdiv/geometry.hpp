#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace phdiv {

using Label = std::int64_t;

enum class Metric { euclidean, cosine, precomputed };

std::string_view to_string(Metric metric);
/// Parses "euclidean", "cosine" or "precomputed"; throws InvalidInput otherwise.
Metric parse_metric(std::string_view name);

/// n points in R^d stored row-major, with optional per-point class labels.
class PointCloud {
public:
    PointCloud(std::vector<std::vector<double>> points,
               std::optional<std::vector<Label>> labels = std::nullopt);
    /// Row-major constructor; coords.size() must equal n * dim.
    PointCloud(std::vector<double> coords, std::size_t dim,
               std::optional<std::vector<Label>> labels = std::nullopt);

    std::size_t size() const { return n_; }
    std::size_t dim() const { return dim_; }
    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * dim_, dim_};
    }
    std::span<const double> coords() const { return coords_; }

    bool has_labels() const { return labels_.has_value(); }
    const std::optional<std::vector<Label>>& labels() const { return labels_; }

    /// Cloud whose i-th point is this cloud's order[i]-th point (labels follow).
    PointCloud reordered(std::span<const std::size_t> order) const;
    /// Cloud restricted to the given indices, in the given order.
    PointCloud subset(std::span<const std::size_t> indices) const { return reordered(indices); }

private:
    void validate() const;

    std::vector<double> coords_;
    std::size_t n_ = 0;
    std::size_t dim_ = 0;
    std::optional<std::vector<Label>> labels_;
};

/// Symmetric dissimilarity matrix with a zero diagonal, stored as the strict
/// upper triangle so that D(i, j) and D(j, i) read the same slot.
class DistanceMatrix {
public:
    /// `upper` holds the n(n-1)/2 entries of the strict upper triangle in
    /// row-major order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
    DistanceMatrix(std::size_t n, std::vector<double> upper, Metric metric);

    std::size_t size() const { return n_; }
    Metric metric() const { return metric_; }

    double operator()(std::size_t i, std::size_t j) const {
        if (i == j) return 0.0;
        if (i > j) std::swap(i, j);
        return upper_[pair_index(i, j)];
    }

    std::span<const double> upper_triangle() const { return upper_; }
    /// Largest entry (0 for n <= 1).
    double diameter() const;

    /// Matrix of this one's entries under the relabelling i -> order[i].
    DistanceMatrix reordered(std::span<const std::size_t> order) const;
    DistanceMatrix subset(std::span<const std::size_t> indices) const { return reordered(indices); }

    std::size_t pair_index(std::size_t i, std::size_t j) const {
        return i * n_ - i * (i + 1) / 2 + (j - i - 1);
    }

private:
    std::size_t n_;
    std::vector<double> upper_;
    Metric metric_;
};

/// Pairwise euclidean or cosine distances of a point cloud.
/// Cosine distance is 1 - cos(angle), clamped to [0, 2].
DistanceMatrix compute_distance_matrix(const PointCloud& cloud, Metric metric);

/// Validates a square matrix supplied by an external tool. Entries that are
/// asymmetric within 1e-9 relative are averaged; diagonal entries within
/// 1e-9 of zero are forced to zero.
DistanceMatrix validate_distance_matrix(const std::vector<std::vector<double>>& raw);

double euclidean_distance(std::span<const double> a, std::span<const double> b);
double cosine_distance(std::span<const double> a, std::span<const double> b);

}  // namespace phdiv
