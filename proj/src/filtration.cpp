#include "phdiv/filtration.hpp"

#include <algorithm>
#include <string>

#include "phdiv/errors.hpp"

namespace phdiv {

bool canonical_less(const Simplex& a, const Simplex& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
}

Filtration::Filtration(DistanceMatrix dist, double eps_max, int max_dim)
    : dist_(std::move(dist)), eps_max_(eps_max), max_dim_(max_dim) {
    const std::size_t n = dist_.size();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const double w = dist_(u, v);
            if (w <= eps_max_) edges_.push_back({u, v, w});
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    if (edges_.size() >= kNoEdge) throw SizeLimit("too many edges for 32-bit edge ids");

    edge_ids_.assign(n * (n - 1) / 2, kNoEdge);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        edge_ids_[dist_.pair_index(edges_[id].u, edges_[id].v)] = id;
    }
}

EdgeId Filtration::edge_id(Vertex u, Vertex v) const {
    if (u == v) return kNoEdge;
    if (u > v) std::swap(u, v);
    return edge_ids_[dist_.pair_index(u, v)];
}

void Filtration::for_each_triangle(const std::function<bool(const Triangle&)>& visit) const {
    if (max_dim_ < 2) return;
    const Vertex n = static_cast<Vertex>(vertex_count());
    std::vector<Triangle> group;

    // Each triangle is generated once, from its last face. Edges of equal
    // value form a group whose triangles share that value; within a group the
    // order is lexicographic in the vertices.
    std::size_t begin = 0;
    while (begin < edges_.size()) {
        std::size_t end = begin + 1;
        while (end < edges_.size() && edges_[end].value == edges_[begin].value) ++end;

        group.clear();
        for (std::size_t id = begin; id < end; ++id) {
            const Edge& e = edges_[id];
            const EdgeId last = static_cast<EdgeId>(id);
            for (Vertex k = 0; k < n; ++k) {
                if (k == e.u || k == e.v) continue;
                const EdgeId a = edge_id(e.u, k);
                if (a >= last) continue;
                const EdgeId b = edge_id(e.v, k);
                if (b >= last) continue;
                Triangle t;
                t.vertices = {e.u, e.v, k};
                std::sort(t.vertices.begin(), t.vertices.end());
                t.value = e.value;
                t.faces = {std::min(a, b), std::max(a, b), last};
                group.push_back(t);
            }
        }
        std::sort(group.begin(), group.end(),
                  [](const Triangle& x, const Triangle& y) { return x.vertices < y.vertices; });
        for (const Triangle& t : group) {
            if (!visit(t)) return;
        }
        begin = end;
    }
}

std::size_t Filtration::triangle_count() const {
    std::size_t count = 0;
    for_each_triangle([&count](const Triangle&) {
        ++count;
        return true;
    });
    return count;
}

std::vector<Simplex> Filtration::materialize() const {
    std::vector<Simplex> out;
    out.reserve(vertex_count() + edges_.size());
    for (Vertex v = 0; v < vertex_count(); ++v) out.push_back({{v, 0, 0}, 0, 0.0});

    std::vector<Simplex> triangles;
    for_each_triangle([&triangles](const Triangle& t) {
        triangles.push_back({t.vertices, 2, t.value});
        return true;
    });

    // Merge edges and triangles; at equal value edges come first.
    std::size_t ti = 0;
    for (const Edge& e : edges_) {
        while (ti < triangles.size() && triangles[ti].value < e.value) out.push_back(triangles[ti++]);
        out.push_back({{e.u, e.v, 0}, 1, e.value});
    }
    while (ti < triangles.size()) out.push_back(triangles[ti++]);
    return out;
}

Filtration build_vr_filtration(const DistanceMatrix& dist, ScaleBound eps_max, int max_dim) {
    if (max_dim != 1 && max_dim != 2) {
        throw InvalidInput("max_dim must be 1 or 2, got " + std::to_string(max_dim));
    }
    const double bound = eps_max.value_or(dist.diameter());
    if (!(bound >= 0.0)) throw InvalidInput("eps_max must be non-negative");
    return Filtration(dist, bound, max_dim);
}

}  // namespace phdiv
