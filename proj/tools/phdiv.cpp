// phdiv: persistent-homology diversity measures for point clouds.
//
//   phdiv diversity --input points.csv [--metric cosine] [--q 1 --q 20] [--oracle]
//   phdiv select    --input labelled.csv --per-class 250 --seed 7 [--measure]
//   phdiv mds       --input points.csv [--subset out/subset_closest.csv ...]

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "phdiv/commands.hpp"
#include "phdiv/parallel.hpp"

namespace {

void add_common_options(CLI::App& cmd, phdiv::RunConfig& config, std::string& kind,
                        std::string& metric) {
    cmd.add_option("--input", config.input_path, "Point CSV (with header) or distance CSV")
        ->required();
    cmd.add_option("--kind", kind, "Input kind")
        ->check(CLI::IsMember({"points", "distances"}))
        ->default_val("points");
    cmd.add_option("--metric", metric, "Distance for point input")
        ->check(CLI::IsMember({"euclidean", "cosine"}));
    cmd.add_option("--out", config.output_dir, "Output directory")->default_val(".");
    cmd.add_option("--max-n", config.max_n, "Refuse inputs with more points")->default_val(2000);
}

void add_measure_options(CLI::App& cmd, phdiv::RunConfig& config, std::vector<double>& orders) {
    cmd.add_option("--q", orders, "Hill-number order (repeatable, default 1 and 20)")
        ->check(CLI::NonNegativeNumber);
    cmd.add_option("--eps-min", config.eps_min, "Lower end of the scale window");
    cmd.add_option("--eps-max", config.eps_max, "Upper end of the scale window");
    cmd.add_option("--zero-tol", config.zero_tol, "Lifetimes at or below this are dropped")
        ->check(CLI::NonNegativeNumber)
        ->default_val(1e-12);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Persistent-homology diversity of point clouds"};
    app.require_subcommand(1);

    phdiv::RunConfig config;
    std::string kind = "points";
    std::string metric;
    std::vector<double> orders;

    auto* diversity = app.add_subcommand("diversity", "Measure H0/H1 persistence diversity");
    add_common_options(*diversity, config, kind, metric);
    add_measure_options(*diversity, config, orders);
    diversity->add_flag("--oracle", config.oracle, "Cross-check against the dense reference reduction");

    auto* select = app.add_subcommand("select", "Build closest/farthest/random balanced subsets");
    add_common_options(*select, config, kind, metric);
    add_measure_options(*select, config, orders);
    select->add_option("--per-class", config.per_class, "Points drawn per class")->default_val(250);
    select->add_option("--seed", config.seed, "Sampling seed")->default_val(0);
    select->add_flag("--measure", config.measure, "Also write a diversity report per subset");

    auto* mds = app.add_subcommand("mds", "Classical MDS to 2D with CSV and SVG output");
    add_common_options(*mds, config, kind, metric);
    mds->add_option("--subset", config.subset_files, "Subset CSV to highlight (repeatable)");

    CLI11_PARSE(app, argc, argv);

    config.input_kind = kind == "distances" ? phdiv::InputKind::distances : phdiv::InputKind::points;
    if (!metric.empty()) {
        config.metric = phdiv::parse_metric(metric);
        config.metric_given = true;
    }
    if (!orders.empty()) config.orders = orders;

    if (diversity->parsed()) return phdiv::cmd_diversity(config, std::cerr);
    if (select->parsed()) return phdiv::cmd_select(config, std::cerr);
    return phdiv::cmd_mds(config, std::cerr);
}
