#include "phdiv/persistence.hpp"

#include <algorithm>
#include <cmath>

#include "phdiv/errors.hpp"
#include "phdiv/union_find.hpp"

namespace phdiv {

std::size_t PersistenceDiagram::essential_count() const {
    return static_cast<std::size_t>(std::count_if(
        intervals.begin(), intervals.end(), [](const Interval& i) { return i.essential(); }));
}

std::vector<Interval> PersistenceDiagram::sorted() const {
    std::vector<Interval> out = intervals;
    std::sort(out.begin(), out.end());
    return out;
}

bool same_intervals(const PersistenceDiagram& a, const PersistenceDiagram& b, double tol) {
    if (a.dim != b.dim || a.size() != b.size()) return false;
    const auto close = [tol](double x, double y) {
        if (x == y) return true;  // covers matching infinities
        return std::abs(x - y) <= tol;
    };
    const auto sa = a.sorted();
    const auto sb = b.sorted();
    for (std::size_t i = 0; i < sa.size(); ++i) {
        if (!close(sa[i].birth, sb[i].birth) || !close(sa[i].death, sb[i].death)) return false;
    }
    return true;
}

PersistenceDiagram compute_h0(const DistanceMatrix& dist, ScaleBound eps_max) {
    const std::size_t n = dist.size();
    const double bound = eps_max.value_or(dist.diameter());

    struct WeightedPair {
        double weight;
        std::size_t u, v;
    };
    std::vector<WeightedPair> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const double w = dist(u, v);
            if (w <= bound) pairs.push_back({w, u, v});
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const WeightedPair& a, const WeightedPair& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });

    PersistenceDiagram diag{0, {}};
    diag.intervals.reserve(n);
    UnionFind components(n);
    for (const auto& p : pairs) {
        if (components.unite(p.u, p.v)) {
            diag.intervals.push_back({0.0, p.weight});
            if (components.components() == 1) break;
        }
    }
    for (std::size_t c = 0; c < components.components(); ++c) {
        diag.intervals.push_back({0.0, kEssential});
    }
    return diag;
}

namespace {

/// Boundary-matrix reduction restricted to triangle columns. Rows are edges
/// in filtration order; a column is a sorted list of edge ids.
class TriangleReducer {
public:
    explicit TriangleReducer(const Filtration& filt)
        : filt_(filt), dist_(filt.distances()), pivot_column_(filt.edges().size(), kNone) {
        // Edges that merge two components are negative: their own columns
        // never reduce to zero, so they can never be the pivot of a triangle
        // column and need not be reduced here.
        UnionFind components(filt.vertex_count());
        positive_.resize(filt.edges().size());
        for (std::size_t id = 0; id < filt.edges().size(); ++id) {
            const Edge& e = filt.edges()[id];
            positive_[id] = !components.unite(e.u, e.v);
            if (positive_[id]) ++unpaired_;
        }
    }

    PersistenceDiagram run() {
        filt_.for_each_triangle([this](const Triangle& t) {
            reduce(t);
            // Once every positive edge is a pivot, all remaining columns
            // reduce to zero.
            return unpaired_ > 0;
        });

        const auto& edges = filt_.edges();
        for (std::size_t id = 0; id < edges.size(); ++id) {
            if (positive_[id] && pivot_column_[id] == kNone) {
                diagram_.intervals.push_back({edges[id].value, kEssential});
            }
        }
        return std::move(diagram_);
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    void reduce(const Triangle& t) {
        const EdgeId low = t.faces[2];
        if (pivot_column_[low] == kNone) {
            store(std::vector<EdgeId>(t.faces.begin(), t.faces.end()), t.value);
            return;
        }
        if (is_last_face_of_tetrahedron(t)) return;

        std::vector<EdgeId> column(t.faces.begin(), t.faces.end());
        std::vector<EdgeId> scratch;
        while (!column.empty()) {
            const std::size_t other = pivot_column_[column.back()];
            if (other == kNone) break;
            const auto& addend = columns_[other];
            scratch.clear();
            std::set_symmetric_difference(column.begin(), column.end(), addend.begin(),
                                          addend.end(), std::back_inserter(scratch));
            column.swap(scratch);
        }
        if (!column.empty()) store(std::move(column), t.value);
    }

    void store(std::vector<EdgeId> column, double death) {
        const EdgeId low = column.back();
        pivot_column_[low] = columns_.size();
        diagram_.intervals.push_back({filt_.edges()[low].value, death});
        columns_.push_back(std::move(column));
        --unpaired_;
    }

    /// Clearing through implicit tetrahedra: if some fourth vertex m makes
    /// every other face of {a, b, c, m} precede t, then the boundary of t is
    /// the sum of three earlier columns and reduces to zero.
    bool is_last_face_of_tetrahedron(const Triangle& t) const {
        const auto [a, b, c] = t.vertices;
        const double w = t.value;
        const std::size_t n = filt_.vertex_count();
        for (Vertex m = 0; m < n; ++m) {
            if (m == a || m == b || m == c) continue;
            const double da = dist_(a, m);
            if (da > w) continue;
            const double db = dist_(b, m);
            if (db > w) continue;
            const double dc = dist_(c, m);
            if (dc > w) continue;
            if (precedes(a, b, m, da, db, t) && precedes(a, c, m, da, dc, t) &&
                precedes(b, c, m, db, dc, t)) {
                return true;
            }
        }
        return false;
    }

    /// Whether triangle {x, y, m} comes before t, given d(x,m) and d(y,m).
    bool precedes(Vertex x, Vertex y, Vertex m, double dxm, double dym, const Triangle& t) const {
        const double value = std::max({dist_(x, y), dxm, dym});
        if (value != t.value) return value < t.value;
        std::array<Vertex, 3> v{x, y, m};
        std::sort(v.begin(), v.end());
        return v < t.vertices;
    }

    const Filtration& filt_;
    const DistanceMatrix& dist_;
    std::vector<bool> positive_;
    std::vector<std::size_t> pivot_column_;  ///< edge id -> index into columns_
    std::vector<std::vector<EdgeId>> columns_;
    std::size_t unpaired_ = 0;
    PersistenceDiagram diagram_{1, {}};
};

}  // namespace

PersistenceDiagram compute_h1(const Filtration& filt) {
    if (filt.max_dim() < 2) {
        throw FiltrationDimError("H1 needs a filtration built with max_dim = 2");
    }
    return TriangleReducer(filt).run();
}

PersistenceDiagram nonzero_intervals(const PersistenceDiagram& diag, double tol) {
    if (!(tol >= 0.0)) throw InvalidInput("zero tolerance must be non-negative");
    PersistenceDiagram out{diag.dim, {}};
    for (const Interval& i : diag.intervals) {
        if (!i.essential() && i.lifetime() > tol) out.intervals.push_back(i);
    }
    return out;
}

}  // namespace phdiv
