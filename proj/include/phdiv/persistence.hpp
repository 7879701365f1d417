#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "phdiv/filtration.hpp"
#include "phdiv/geometry.hpp"

namespace phdiv {

inline constexpr double kEssential = std::numeric_limits<double>::infinity();
inline constexpr double kDefaultZeroTol = 1e-12;
inline constexpr std::size_t kDefaultOracleLimit = 50'000;

/// A persistence interval [birth, death). Essential intervals never die
/// within the filtration range and carry death = kEssential.
struct Interval {
    double birth = 0.0;
    double death = kEssential;

    bool essential() const { return death == kEssential; }
    /// death - birth; meaningless for essential intervals.
    double lifetime() const { return death - birth; }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend bool operator<(const Interval& a, const Interval& b) {
        return a.birth != b.birth ? a.birth < b.birth : a.death < b.death;
    }
};

struct PersistenceDiagram {
    int dim = 0;
    std::vector<Interval> intervals;

    std::size_t size() const { return intervals.size(); }
    std::size_t essential_count() const;
    std::size_t finite_count() const { return size() - essential_count(); }
    /// Intervals sorted by (birth, death); the canonical multiset form.
    std::vector<Interval> sorted() const;
};

/// True when both diagrams have the same dimension and, as multisets, the
/// same intervals with every coordinate within `tol`.
bool same_intervals(const PersistenceDiagram& a, const PersistenceDiagram& b, double tol = 0.0);

/// Zero-dimensional persistence by a Kruskal sweep over edges <= eps_max,
/// ordered by (weight, smaller index, larger index).
PersistenceDiagram compute_h0(const DistanceMatrix& dist, ScaleBound eps_max = kAutoScale);

/// One-dimensional persistence by Z/2 reduction of the triangle-to-edge
/// boundary matrix in filtration order. Zero-lifetime intervals are kept.
/// Throws FiltrationDimError unless the filtration was built with max_dim 2.
PersistenceDiagram compute_h1(const Filtration& filt);

struct OracleDiagrams {
    PersistenceDiagram h0;
    PersistenceDiagram h1;
};

/// Reference computation: plain column reduction of the full dense boundary
/// matrix (vertices, edges and triangles together, no shortcuts). Only meant
/// for small inputs; throws SizeLimit above `max_simplices`.
OracleDiagrams oracle_reduce(const Filtration& filt,
                             std::size_t max_simplices = kDefaultOracleLimit);

/// Finite intervals with lifetime > tol. Essential intervals are dropped.
PersistenceDiagram nonzero_intervals(const PersistenceDiagram& diag,
                                     double tol = kDefaultZeroTol);

}  // namespace phdiv
