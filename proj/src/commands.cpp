#include "phdiv/commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "phdiv/diversity.hpp"
#include "phdiv/errors.hpp"
#include "phdiv/filtration.hpp"
#include "phdiv/io.hpp"
#include "phdiv/persistence.hpp"
#include "phdiv/projection.hpp"
#include "phdiv/selection.hpp"

namespace phdiv {

namespace {

constexpr double kOracleTol = 1e-9;

struct Dataset {
    std::optional<PointCloud> cloud;
    DistanceMatrix dist;
};

Dataset load(const RunConfig& config, std::ostream& log) {
    if (config.input_kind == InputKind::distances) {
        if (config.metric_given) log << "warning: --metric is ignored for distance-matrix input\n";
        return {std::nullopt, io::read_distances_csv(config.input_path)};
    }
    PointCloud cloud = io::read_points_csv(config.input_path);
    DistanceMatrix dist = compute_distance_matrix(cloud, config.metric);
    return {std::move(cloud), std::move(dist)};
}

/// Resolves --eps-min/--eps-max into a window; none when neither is given.
std::optional<ScaleWindow> resolve_window(const RunConfig& config, double diameter) {
    if (!config.eps_min && !config.eps_max) return std::nullopt;
    return ScaleWindow{config.eps_min.value_or(0.0), config.eps_max.value_or(diameter)};
}

template <typename Body>
int guarded(std::ostream& log, Body&& body) {
    try {
        return body();
    } catch (const SizeLimit& e) {
        log << "error: " << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

bool check_size(const DistanceMatrix& dist, const RunConfig& config, std::ostream& log) {
    if (dist.size() > config.max_n) {
        log << "error: input has " << dist.size() << " points, above --max-n " << config.max_n
            << "\n";
        return false;
    }
    return true;
}

}  // namespace

nlohmann::json config_json(const RunConfig& c) {
    nlohmann::json j = {
        {"input", c.input_path.string()},
        {"kind", c.input_kind == InputKind::points ? "points" : "distances"},
        {"metric", c.input_kind == InputKind::points ? std::string(to_string(c.metric))
                                                     : std::string("precomputed")},
        {"q", c.orders},
        {"eps_min", c.eps_min ? nlohmann::json(*c.eps_min) : nlohmann::json(nullptr)},
        {"eps_max", c.eps_max ? nlohmann::json(*c.eps_max) : nlohmann::json(nullptr)},
        {"zero_tol", c.zero_tol},
        {"seed", c.seed},
        {"per_class", c.per_class},
        {"oracle", c.oracle},
        {"max_n", c.max_n},
    };
    return j;
}

int cmd_diversity(const RunConfig& config, std::ostream& log) {
    return guarded(log, [&] {
        const Dataset data = load(config, log);
        if (!check_size(data.dist, config, log)) return static_cast<int>(kExitSizeLimit);

        ReportOptions options;
        options.orders = config.orders;
        options.zero_tol = config.zero_tol;
        options.window = resolve_window(config, data.dist.diameter());
        const auto result =
            build_report_with_diagrams(data.dist, data.cloud ? &*data.cloud : nullptr, options);

        nlohmann::json json = io::report_json(result.report);
        json["config"] = config_json(config);

        int code = kExitOk;
        if (config.oracle) {
            const auto oracle = oracle_reduce(build_vr_filtration(data.dist, kAutoScale, 2));
            const bool match = same_intervals(oracle.h0, result.h0, kOracleTol) &&
                               same_intervals(oracle.h1, result.h1, kOracleTol);
            json["oracle_match"] = match;
            log << "oracle " << (match ? "agrees" : "DISAGREES") << " with the fast path\n";
            if (!match) code = kExitOracleMismatch;
        }

        io::write_file_atomic(config.output_dir / "report.json", json.dump(2) + "\n");
        io::write_file_atomic(config.output_dir / "diagram_h0.csv", io::diagram_csv(result.h0));
        io::write_file_atomic(config.output_dir / "diagram_h1.csv", io::diagram_csv(result.h1));
        log << "wrote report for " << data.dist.size() << " points to "
            << config.output_dir.string() << "\n";
        return code;
    });
}

int cmd_select(const RunConfig& config, std::ostream& log) {
    return guarded(log, [&] {
        const Dataset data = load(config, log);
        if (!data.cloud || !data.cloud->has_labels()) {
            log << "error: labels required (add a final `label` column to the point file)\n";
            return static_cast<int>(kExitFailure);
        }
        const auto& labels = *data.cloud->labels();

        nlohmann::json meta;
        meta["config"] = config_json(config);
        meta["ranking"] = "ascending (eccentricity, index); halves split over all points";
        meta["rng"] = "xoshiro256** seeded by splitmix64; partial Fisher-Yates per label";
        nlohmann::json subsets = nlohmann::json::object();

        for (SubsetKind kind : {SubsetKind::closest, SubsetKind::farthest, SubsetKind::random}) {
            const SubsetSpec spec{kind, config.per_class, config.seed};
            const SubsetResult subset = select_subset(data.dist, labels, spec);
            const std::string name(to_string(kind));
            io::write_file_atomic(config.output_dir / ("subset_" + name + ".csv"),
                                  io::subset_csv(subset, labels));

            nlohmann::json entry = {
                {"size", subset.indices.size()},
                {"lower_half", subset.lower_half},
                {"upper_half", subset.upper_half},
            };
            nlohmann::json counts = nlohmann::json::object();
            for (const auto& [label, count] : subset.class_counts) counts[std::to_string(label)] = count;
            entry["class_counts"] = counts;

            if (config.measure) {
                const PointCloud sub_cloud = data.cloud->subset(subset.indices);
                const DistanceMatrix sub_dist = data.dist.subset(subset.indices);
                ReportOptions options;
                options.orders = config.orders;
                options.zero_tol = config.zero_tol;
                options.window = resolve_window(config, sub_dist.diameter());
                nlohmann::json report = io::report_json(build_report(sub_dist, &sub_cloud, options));
                report["config"] = config_json(config);
                report["subset"] = name;
                io::write_file_atomic(config.output_dir / ("report_" + name + ".json"),
                                      report.dump(2) + "\n");
            }
            subsets[name] = std::move(entry);
            log << name << ": " << subset.indices.size() << " points\n";
        }
        meta["subsets"] = std::move(subsets);
        io::write_file_atomic(config.output_dir / "subsets.json", meta.dump(2) + "\n");
        return static_cast<int>(kExitOk);
    });
}

int cmd_mds(const RunConfig& config, std::ostream& log) {
    return guarded(log, [&] {
        const Dataset data = load(config, log);
        const Embedding emb = classical_mds(data.dist, 2);
        if (emb.non_euclidean) {
            log << "warning: non_euclidean distances; negative eigenvalues were discarded\n";
        }

        const std::size_t n = data.dist.size();
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double dx = emb.point(i)[0] - emb.point(j)[0];
                const double dy = emb.point(i)[1] - emb.point(j)[1];
                worst = std::max(worst, std::abs(std::hypot(dx, dy) - data.dist(i, j)));
            }
        }
        const double diameter = data.dist.diameter();
        log << "distance recovery: max error " << worst << " (diameter " << diameter << ", "
            << (worst <= 1e-6 * std::max(diameter, 1e-300) ? "exact" : "approximate")
            << "), stress " << emb.stress << "\n";

        std::vector<std::vector<std::string>> membership(n);
        for (const auto& path : config.subset_files) {
            std::string kind = path.stem().string();
            if (kind.rfind("subset_", 0) == 0) kind = kind.substr(7);
            for (std::size_t idx : io::read_subset_indices(path)) {
                if (idx >= n) throw InvalidInput("subset index " + std::to_string(idx) + " out of range");
                membership[idx].push_back(kind);
            }
        }

        std::optional<std::vector<Label>> labels;
        if (data.cloud) labels = data.cloud->labels();

        std::string csv = "x,y,label,subset_kind\n";
        std::vector<PlotPoint> plot;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = emb.point(i)[0];
            const double y = emb.point(i)[1];
            std::optional<Label> label;
            if (labels) label = (*labels)[i];
            std::string kinds;
            for (const auto& k : membership[i]) kinds += (kinds.empty() ? "" : "+") + k;
            csv += io::format_number(x) + "," + io::format_number(y) + "," +
                   (label ? std::to_string(*label) : std::string()) + "," + kinds + "\n";
            if (membership[i].empty()) {
                plot.push_back({x, y, label, ""});
            } else {
                for (const auto& k : membership[i]) plot.push_back({x, y, label, k});
            }
        }
        io::write_file_atomic(config.output_dir / "mds.csv", csv);
        io::write_file_atomic(config.output_dir / "mds.svg",
                              render_scatter_svg(plot, "Classical MDS of " +
                                                           config.input_path.filename().string()));
        log << "wrote mds.csv and mds.svg for " << n << " points\n";
        return static_cast<int>(kExitOk);
    });
}

}  // namespace phdiv
