#include "phdiv/diversity.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "phdiv/errors.hpp"
#include "phdiv/filtration.hpp"

namespace phdiv {

namespace {

constexpr double kShannonBand = 1e-9;

}  // namespace

// --- LifetimeDistribution -------------------------------------------------

LifetimeDistribution::LifetimeDistribution(std::vector<double> lifetimes)
    : lifetimes_(std::move(lifetimes)) {
    for (double l : lifetimes_) {
        if (!std::isfinite(l) || !(l > 0.0)) {
            throw InvalidInput("lifetimes must be finite and positive");
        }
    }
    std::sort(lifetimes_.begin(), lifetimes_.end());
    for (double l : lifetimes_) total_ += l;
    weights_.reserve(lifetimes_.size());
    for (double l : lifetimes_) weights_.push_back(l / total_);
}

LifetimeDistribution LifetimeDistribution::from_diagram(const PersistenceDiagram& diag,
                                                        double zero_tol) {
    std::vector<double> lifetimes;
    for (const Interval& i : nonzero_intervals(diag, zero_tol).intervals) {
        lifetimes.push_back(i.lifetime());
    }
    return LifetimeDistribution(std::move(lifetimes));
}

// --- entropies -------------------------------------------------------------

double renyi_persistence_entropy(const LifetimeDistribution& dist, double q) {
    if (!(q >= 0.0)) throw NegativeOrder("entropy order must be non-negative");
    if (dist.size() <= 1) return 0.0;
    const auto p = dist.weights();

    if (std::abs(q - 1.0) < kShannonBand) {
        double h = 0.0;
        for (double w : p) h -= w * std::log(w);
        return std::max(0.0, h);
    }
    if (std::isinf(q)) return -std::log(p.back());

    // log(sum p^q) evaluated relative to the largest weight so high orders
    // do not underflow.
    const double largest = *std::max_element(p.begin(), p.end());
    double scaled = 0.0;
    for (double w : p) scaled += std::pow(w / largest, q);
    const double log_sum = q * std::log(largest) + std::log(scaled);
    return std::max(0.0, log_sum / (1.0 - q));
}

double hill_number(const LifetimeDistribution& dist, double q) {
    return std::exp(renyi_persistence_entropy(dist, q));
}

SummaryStats summary_stats(const LifetimeDistribution& dist) {
    if (dist.empty()) return {};
    const auto l = dist.lifetimes();
    SummaryStats s;
    s.min = l.front();
    s.max = l.back();
    s.total = dist.total();
    s.count = l.size();
    s.mean = s.total / static_cast<double>(s.count);
    return s;
}

PersistenceDiagram clip_to_window(const PersistenceDiagram& diag, double eps_min, double eps_max) {
    if (!(eps_min >= 0.0) || !(eps_min < eps_max)) {
        throw WindowOrderError("scale window needs 0 <= eps_min < eps_max");
    }
    PersistenceDiagram out{diag.dim, {}};
    for (const Interval& i : diag.intervals) {
        const double birth = std::max(i.birth, eps_min);
        const double death = std::min(i.death, eps_max);
        if (death - birth > 0.0) out.intervals.push_back({birth, death});
    }
    return out;
}

// --- Vendi Score -----------------------------------------------------------

double vendi_score(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    const std::size_t d = cloud.dim();

    std::vector<std::vector<double>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = cloud.point(i);
        double norm2 = 0.0;
        for (double x : p) norm2 += x * x;
        if (norm2 == 0.0) {
            throw ZeroVectorError("point " + std::to_string(i) +
                                  " has zero norm; the Vendi Score is undefined");
        }
        const double norm = std::sqrt(norm2);
        rows[i].reserve(d);
        for (double x : p) rows[i].push_back(x / norm);
    }
    // The score is permutation invariant; fixing the row order makes it
    // bitwise invariant too.
    std::sort(rows.begin(), rows.end());

    Eigen::MatrixXd unit(n, d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < d; ++k) unit(i, k) = rows[i][k];
    }
    const Eigen::MatrixXd kernel = (unit * unit.transpose()) / static_cast<double>(n);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(kernel, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw EigenFailure("symmetric eigensolver did not converge");
    }
    const Eigen::VectorXd& eig = solver.eigenvalues();

    // Eigenvalues below the numerical rank threshold are round-off of exact zeros.
    const double largest = std::max(eig.maxCoeff(), 0.0);
    const double cutoff = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * largest;
    std::vector<double> lambda;
    double sum = 0.0;
    for (Eigen::Index i = 0; i < eig.size(); ++i) {
        if (eig[i] > cutoff) {
            lambda.push_back(eig[i]);
            sum += eig[i];
        }
    }
    if (lambda.size() <= 1) return 1.0;
    double entropy = 0.0;
    for (double l : lambda) {
        const double p = l / sum;
        entropy -= p * std::log(p);
    }
    return std::clamp(std::exp(entropy), 1.0, static_cast<double>(n));
}

// --- report ----------------------------------------------------------------

std::string order_key(double q) {
    char buf[64];
    if (q == std::floor(q) && std::abs(q) < 1e15) {
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, static_cast<long long>(q));
        return "q" + std::string(buf, end);
    }
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, q);
    return "q" + std::string(buf, end);
}

namespace {

DimensionSummary summarize(const PersistenceDiagram& raw, const ReportOptions& options) {
    PersistenceDiagram kept = nonzero_intervals(raw, options.zero_tol);
    if (options.window) kept = clip_to_window(kept, options.window->eps_min, options.window->eps_max);
    const auto dist = LifetimeDistribution::from_diagram(kept, options.zero_tol);

    DimensionSummary out;
    for (double q : options.orders) {
        out.entropy[q] = renyi_persistence_entropy(dist, q);
        out.hill[q] = hill_number(dist, q);
    }
    out.stats = summary_stats(dist);
    out.raw_intervals = raw.size();
    out.essential = raw.essential_count();
    return out;
}

}  // namespace

ReportWithDiagrams build_report_with_diagrams(const DistanceMatrix& dist,
                                              const PointCloud* cloud,
                                              const ReportOptions& options) {
    if (options.orders.empty()) throw InvalidInput("at least one entropy order is required");
    for (double q : options.orders) {
        if (!(q >= 0.0)) throw NegativeOrder("entropy order must be non-negative");
    }
    if (!(options.zero_tol >= 0.0)) throw InvalidInput("zero tolerance must be non-negative");
    if (options.window && !(options.window->eps_min >= 0.0 &&
                            options.window->eps_min < options.window->eps_max)) {
        throw WindowOrderError("scale window needs 0 <= eps_min < eps_max");
    }
    if (cloud && cloud->size() != dist.size()) {
        throw InvalidInput("point cloud and distance matrix sizes differ");
    }

    ReportWithDiagrams out;
    out.h0 = compute_h0(dist);
    out.h1 = compute_h1(build_vr_filtration(dist, kAutoScale, 2));

    DiversityReport& r = out.report;
    r.h0 = summarize(out.h0, options);
    r.h1 = summarize(out.h1, options);
    if (cloud) r.vendi = vendi_score(*cloud);
    r.metric = std::string(to_string(dist.metric()));
    r.diameter = dist.diameter();
    r.windowed = options.window.has_value();
    r.eps_min = options.window ? options.window->eps_min : 0.0;
    r.eps_max = options.window ? options.window->eps_max : r.diameter;
    r.zero_tol = options.zero_tol;
    r.points = dist.size();
    return out;
}

DiversityReport build_report(const DistanceMatrix& dist, const PointCloud* cloud,
                             const ReportOptions& options) {
    return build_report_with_diagrams(dist, cloud, options).report;
}

}  // namespace phdiv
