#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phdiv/geometry.hpp"
#include "phdiv/persistence.hpp"

namespace phdiv {

/// Normalized persistence weights p_i = l_i / L of a multiset of positive
/// lifetimes. Lifetimes are kept sorted so every sum is independent of the
/// order in which intervals were produced.
class LifetimeDistribution {
public:
    LifetimeDistribution() = default;
    /// Throws InvalidInput if any lifetime is not finite and positive.
    explicit LifetimeDistribution(std::vector<double> lifetimes);
    /// Lifetimes of the finite intervals of `diag` longer than `zero_tol`.
    static LifetimeDistribution from_diagram(const PersistenceDiagram& diag,
                                             double zero_tol = kDefaultZeroTol);

    bool empty() const { return lifetimes_.empty(); }
    std::size_t size() const { return lifetimes_.size(); }
    std::span<const double> lifetimes() const { return lifetimes_; }
    std::span<const double> weights() const { return weights_; }
    double total() const { return total_; }

private:
    std::vector<double> lifetimes_;
    std::vector<double> weights_;
    double total_ = 0.0;
};

/// Renyi entropy of order q (natural log) of the persistence weights; the
/// Shannon form is used when |q - 1| < 1e-9. An empty distribution has
/// entropy 0. Throws NegativeOrder for q < 0.
double renyi_persistence_entropy(const LifetimeDistribution& dist, double q);

/// exp(renyi_persistence_entropy): the effective number of features.
double hill_number(const LifetimeDistribution& dist, double q);

struct SummaryStats {
    double min = 0.0;
    double mean = 0.0;
    double max = 0.0;
    double total = 0.0;
    std::size_t count = 0;

    friend bool operator==(const SummaryStats&, const SummaryStats&) = default;
};

SummaryStats summary_stats(const LifetimeDistribution& dist);

/// Intersects every interval with [eps_min, eps_max]. Essential intervals
/// become finite intervals ending at eps_max; empty results are dropped.
PersistenceDiagram clip_to_window(const PersistenceDiagram& diag, double eps_min, double eps_max);

/// exp of the Shannon entropy of the eigenvalues of K / n, where K is the
/// cosine-similarity Gram matrix of the rows. Lies in [1, n].
double vendi_score(const PointCloud& cloud);

struct ScaleWindow {
    double eps_min = 0.0;
    double eps_max = 0.0;
};

struct ReportOptions {
    std::vector<double> orders{1.0, 20.0};
    std::optional<ScaleWindow> window;
    double zero_tol = kDefaultZeroTol;
};

struct DimensionSummary {
    std::map<double, double> hill;     ///< q -> PEH
    std::map<double, double> entropy;  ///< q -> PE
    SummaryStats stats;
    std::size_t raw_intervals = 0;
    std::size_t essential = 0;

    friend bool operator==(const DimensionSummary&, const DimensionSummary&) = default;
};

struct DiversityReport {
    DimensionSummary h0;
    DimensionSummary h1;
    std::optional<double> vendi;
    std::string metric;
    double eps_min = 0.0;
    double eps_max = 0.0;  ///< upper scale of the lifetimes summarized
    double diameter = 0.0;
    double zero_tol = kDefaultZeroTol;
    bool windowed = false;
    std::size_t points = 0;

    friend bool operator==(const DiversityReport&, const DiversityReport&) = default;
};

struct ReportWithDiagrams {
    DiversityReport report;
    PersistenceDiagram h0;  ///< raw diagrams before filtering
    PersistenceDiagram h1;
};

/// Full pipeline: H0 and H1 over the whole diameter, zero-lifetime filter,
/// optional window clip, entropies and Hill numbers for every order, and the
/// Vendi Score when the point cloud is available.
ReportWithDiagrams build_report_with_diagrams(const DistanceMatrix& dist,
                                              const PointCloud* cloud,
                                              const ReportOptions& options = {});
DiversityReport build_report(const DistanceMatrix& dist, const PointCloud* cloud,
                             const ReportOptions& options = {});

/// Key used for order q in serialized reports: "q1", "q20", "q0.5".
std::string order_key(double q);

}  // namespace phdiv
