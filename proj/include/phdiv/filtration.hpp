#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "phdiv/geometry.hpp"

namespace phdiv {

using Vertex = std::uint32_t;
/// Position of an edge in the filtration's edge order.
using EdgeId = std::uint32_t;

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

/// Upper bound of the filtration scale; std::nullopt means the diameter of D.
using ScaleBound = std::optional<double>;
inline constexpr ScaleBound kAutoScale = std::nullopt;

struct Simplex {
    std::array<Vertex, 3> vertices{};  ///< sorted; entries past dim are 0
    int dim = 0;
    double value = 0.0;

    friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// Total order (value, dim, vertex tuple) used throughout the filtration.
bool canonical_less(const Simplex& a, const Simplex& b);

struct Edge {
    Vertex u = 0;  ///< u < v
    Vertex v = 0;
    double value = 0.0;
};

struct Triangle {
    std::array<Vertex, 3> vertices{};
    double value = 0.0;
    /// Positions of the three faces in the edge order, ascending. The last
    /// one is the face that enters the filtration last.
    std::array<EdgeId, 3> faces{};
};

/// Vietoris-Rips filtration of a distance matrix, up to triangles.
///
/// Vertices and edges are held explicitly. Triangles (Theta(n^3) of them) are
/// generated on demand in filtration order by for_each_triangle(); call
/// materialize() when the whole simplex sequence is needed at once.
class Filtration {
public:
    const DistanceMatrix& distances() const { return dist_; }
    std::size_t vertex_count() const { return dist_.size(); }
    int max_dim() const { return max_dim_; }
    double eps_max() const { return eps_max_; }

    /// Edges with value <= eps_max, ascending by (value, u, v).
    const std::vector<Edge>& edges() const { return edges_; }
    /// Position of edge {u, v} in edges(), or kNoEdge if above eps_max.
    EdgeId edge_id(Vertex u, Vertex v) const;

    /// Streams every triangle with value <= eps_max in filtration order until
    /// `visit` returns false. Does nothing when max_dim < 2.
    void for_each_triangle(const std::function<bool(const Triangle&)>& visit) const;
    std::size_t triangle_count() const;
    std::size_t simplex_count() const { return vertex_count() + edges_.size() + triangle_count(); }

    /// Full simplex sequence in canonical order.
    std::vector<Simplex> materialize() const;

private:
    friend Filtration build_vr_filtration(const DistanceMatrix&, ScaleBound, int);
    Filtration(DistanceMatrix dist, double eps_max, int max_dim);

    DistanceMatrix dist_;
    double eps_max_;
    int max_dim_;
    std::vector<Edge> edges_;
    std::vector<EdgeId> edge_ids_;  ///< indexed by DistanceMatrix::pair_index
};

/// Builds the Vietoris-Rips filtration of `dist` up to dimension max_dim (1 or 2).
/// kAutoScale resolves eps_max to the largest pairwise distance.
Filtration build_vr_filtration(const DistanceMatrix& dist, ScaleBound eps_max = kAutoScale,
                               int max_dim = 2);

}  // namespace phdiv
