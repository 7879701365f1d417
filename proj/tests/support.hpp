#pragma once

// Test-only helpers: random inputs and reference computations that share no
// code with the library paths they check.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "phdiv/geometry.hpp"
#include "phdiv/persistence.hpp"

namespace phdiv::fixtures {

inline PointCloud random_cloud(std::mt19937_64& rng, std::size_t n, std::size_t d,
                               bool labelled = false) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> coords(n * d);
    for (double& x : coords) x = normal(rng);
    std::optional<std::vector<Label>> labels;
    if (labelled) {
        labels.emplace(n);
        for (std::size_t i = 0; i < n; ++i) (*labels)[i] = static_cast<Label>(i % 2);
    }
    return PointCloud(std::move(coords), d, std::move(labels));
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Dense O(n^2) Prim's algorithm; returns the MST edge weights, sorted.
inline std::vector<double> prim_mst_weights(const DistanceMatrix& dist) {
    const std::size_t n = dist.size();
    std::vector<bool> in_tree(n, false);
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    std::vector<double> weights;
    best[0] = 0.0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t next = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (!in_tree[v] && (next == n || best[v] < best[next])) next = v;
        }
        in_tree[next] = true;
        if (step > 0) weights.push_back(best[next]);
        for (std::size_t v = 0; v < n; ++v) {
            if (!in_tree[v]) best[v] = std::min(best[v], dist(next, v));
        }
    }
    std::sort(weights.begin(), weights.end());
    return weights;
}

inline std::vector<double> finite_deaths(const PersistenceDiagram& diag) {
    std::vector<double> out;
    for (const auto& i : diag.intervals) {
        if (!i.essential()) out.push_back(i.death);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Points evenly spaced on the unit circle.
inline PointCloud circle(std::size_t n, double radius = 1.0) {
    std::vector<std::vector<double>> pts;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n);
        pts.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    return PointCloud(pts);
}

inline PointCloud unit_square() { return PointCloud({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

inline PointCloud line_points(std::initializer_list<double> xs) {
    std::vector<std::vector<double>> pts;
    for (double x : xs) pts.push_back({x});
    return PointCloud(pts);
}

}  // namespace phdiv::fixtures
