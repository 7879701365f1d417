#include "phdiv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "phdiv/errors.hpp"
#include "phdiv/parallel.hpp"

namespace phdiv {

namespace {

constexpr double kSymmetryTol = 1e-9;

}  // namespace

std::string_view to_string(Metric metric) {
    switch (metric) {
        case Metric::euclidean: return "euclidean";
        case Metric::cosine: return "cosine";
        case Metric::precomputed: return "precomputed";
    }
    return "unknown";
}

Metric parse_metric(std::string_view name) {
    if (name == "euclidean") return Metric::euclidean;
    if (name == "cosine") return Metric::cosine;
    if (name == "precomputed") return Metric::precomputed;
    throw InvalidInput("unknown metric '" + std::string(name) + "'");
}

// --- PointCloud ------------------------------------------------------------

PointCloud::PointCloud(std::vector<std::vector<double>> points,
                       std::optional<std::vector<Label>> labels)
    : n_(points.size()), labels_(std::move(labels)) {
    if (points.empty()) throw InvalidInput("point cloud must contain at least one point");
    dim_ = points.front().size();
    coords_.reserve(n_ * dim_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (points[i].size() != dim_) {
            throw DimensionMismatch("point " + std::to_string(i) + " has dimension " +
                                    std::to_string(points[i].size()) + ", expected " +
                                    std::to_string(dim_));
        }
        coords_.insert(coords_.end(), points[i].begin(), points[i].end());
    }
    validate();
}

PointCloud::PointCloud(std::vector<double> coords, std::size_t dim,
                       std::optional<std::vector<Label>> labels)
    : coords_(std::move(coords)), dim_(dim), labels_(std::move(labels)) {
    if (dim_ == 0) throw InvalidInput("point dimension must be at least 1");
    if (coords_.size() % dim_ != 0) {
        throw DimensionMismatch("coordinate count is not a multiple of the dimension");
    }
    n_ = coords_.size() / dim_;
    validate();
}

void PointCloud::validate() const {
    if (n_ == 0) throw InvalidInput("point cloud must contain at least one point");
    if (dim_ == 0) throw InvalidInput("point dimension must be at least 1");
    if (labels_ && labels_->size() != n_) {
        throw InvalidInput("label count " + std::to_string(labels_->size()) +
                           " does not match point count " + std::to_string(n_));
    }
    for (double x : coords_) {
        if (!std::isfinite(x)) throw NonFinite("point coordinates must be finite");
    }
}

PointCloud PointCloud::reordered(std::span<const std::size_t> order) const {
    std::vector<double> coords;
    coords.reserve(order.size() * dim_);
    std::optional<std::vector<Label>> labels;
    if (labels_) labels.emplace().reserve(order.size());
    for (std::size_t idx : order) {
        if (idx >= n_) throw InvalidInput("point index out of range");
        const auto p = point(idx);
        coords.insert(coords.end(), p.begin(), p.end());
        if (labels_) labels->push_back((*labels_)[idx]);
    }
    return PointCloud(std::move(coords), dim_, std::move(labels));
}

// --- DistanceMatrix --------------------------------------------------------

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> upper, Metric metric)
    : n_(n), upper_(std::move(upper)), metric_(metric) {
    if (n_ == 0) throw InvalidInput("distance matrix must have at least one point");
    if (upper_.size() != n_ * (n_ - 1) / 2) {
        throw InvalidInput("upper triangle has " + std::to_string(upper_.size()) +
                           " entries, expected " + std::to_string(n_ * (n_ - 1) / 2));
    }
    for (double v : upper_) {
        if (!std::isfinite(v)) throw NonFinite("distance entries must be finite");
        if (v < 0.0) throw NegativeDistance("distance entries must be non-negative");
    }
}

double DistanceMatrix::diameter() const {
    double best = 0.0;
    for (double v : upper_) best = std::max(best, v);
    return best;
}

DistanceMatrix DistanceMatrix::reordered(std::span<const std::size_t> order) const {
    const std::size_t m = order.size();
    for (std::size_t idx : order) {
        if (idx >= n_) throw InvalidInput("point index out of range");
    }
    std::vector<double> upper;
    upper.reserve(m * (m - 1) / 2);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) upper.push_back((*this)(order[i], order[j]));
    }
    return DistanceMatrix(m, std::move(upper), metric_);
}

// --- distances -------------------------------------------------------------

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = a[k] - b[k];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

double cosine_distance(std::span<const double> a, std::span<const double> b) {
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        dot += a[k] * b[k];
        na += a[k] * a[k];
        nb += b[k] * b[k];
    }
    if (na == 0.0 || nb == 0.0) throw ZeroVectorError("cosine distance of a zero vector");
    // sqrt(na * nb) rather than sqrt(na) * sqrt(nb): identical vectors then
    // give a ratio of exactly 1.
    const double cos = dot / std::sqrt(na * nb);
    return std::clamp(1.0 - cos, 0.0, 2.0);
}

DistanceMatrix compute_distance_matrix(const PointCloud& cloud, Metric metric) {
    if (metric == Metric::precomputed) {
        throw InvalidInput("compute_distance_matrix needs the euclidean or cosine metric");
    }
    const std::size_t n = cloud.size();
    if (metric == Metric::cosine) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto p = cloud.point(i);
            if (std::all_of(p.begin(), p.end(), [](double x) { return x == 0.0; })) {
                throw ZeroVectorError("point " + std::to_string(i) +
                                      " has zero norm; cosine distance is undefined");
            }
        }
    }

    std::vector<double> upper(n * (n - 1) / 2);
    // Rows are independent, so the result does not depend on the worker count.
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            std::size_t slot = i * n - i * (i + 1) / 2;
            for (std::size_t j = i + 1; j < n; ++j, ++slot) {
                upper[slot] = metric == Metric::euclidean
                                  ? euclidean_distance(cloud.point(i), cloud.point(j))
                                  : cosine_distance(cloud.point(i), cloud.point(j));
            }
        }
    });
    return DistanceMatrix(n, std::move(upper), metric);
}

DistanceMatrix validate_distance_matrix(const std::vector<std::vector<double>>& raw) {
    const std::size_t n = raw.size();
    if (n == 0) throw InvalidInput("distance matrix is empty");
    for (std::size_t i = 0; i < n; ++i) {
        if (raw[i].size() != n) {
            throw InvalidInput("distance matrix is not square: row " + std::to_string(i) +
                               " has " + std::to_string(raw[i].size()) + " columns, expected " +
                               std::to_string(n));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = raw[i][j];
            const std::string where = "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
            if (!std::isfinite(v)) throw NonFinite("non-finite distance at " + where);
            if (v < -kSymmetryTol) throw NegativeDistance("negative distance at " + where);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(raw[i][i]) > kSymmetryTol) {
            throw NonzeroDiagonal("nonzero diagonal entry at row " + std::to_string(i));
        }
    }

    std::vector<double> upper;
    upper.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = raw[i][j];
            const double b = raw[j][i];
            if (std::abs(a - b) > kSymmetryTol * std::max(1.0, std::abs(a))) {
                throw AsymmetryError("entries (" + std::to_string(i) + ", " + std::to_string(j) +
                                     ") and (" + std::to_string(j) + ", " + std::to_string(i) +
                                     ") differ");
            }
            upper.push_back(std::max(0.0, a == b ? a : 0.5 * (a + b)));
        }
    }
    return DistanceMatrix(n, std::move(upper), Metric::precomputed);
}

}  // namespace phdiv
