#include "phdiv/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "phdiv/errors.hpp"

namespace phdiv::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string location(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

double parse_real(std::string_view field, std::size_t line_no) {
    double value = 0.0;
    const char* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end || field.empty()) {
        throw InvalidInput(location(line_no) + "cannot parse '" + std::string(field) + "' as a number");
    }
    return value;
}

Label parse_label(std::string_view field, std::size_t line_no) {
    Label value = 0;
    const char* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end || field.empty()) {
        throw InvalidInput(location(line_no) + "label '" + std::string(field) +
                           "' is not an integer");
    }
    return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
    return in;
}

}  // namespace

PointCloud read_points_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string_view> header;
    std::string header_line;
    while (std::getline(in, header_line)) {
        ++line_no;
        if (!trim(header_line).empty()) break;
    }
    if (trim(header_line).empty()) throw InvalidInput("point file is empty");
    header = split_fields(header_line);
    const bool labelled = header.back() == "label";
    const std::size_t width = header.size();
    const std::size_t dim = labelled ? width - 1 : width;
    if (dim == 0) throw InvalidInput("point file has no coordinate columns");

    std::vector<double> coords;
    std::vector<Label> labels;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != width) {
            throw DimensionMismatch(location(line_no) + "expected " + std::to_string(width) +
                                    " columns, found " + std::to_string(fields.size()));
        }
        for (std::size_t k = 0; k < dim; ++k) coords.push_back(parse_real(fields[k], line_no));
        if (labelled) labels.push_back(parse_label(fields.back(), line_no));
    }
    if (coords.empty()) throw InvalidInput("point file has a header but no points");
    return PointCloud(std::move(coords), dim,
                      labelled ? std::optional<std::vector<Label>>(std::move(labels)) : std::nullopt);
}

PointCloud read_points_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_points_csv(in);
}

DistanceMatrix read_distances_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<double> row;
        for (auto field : split_fields(line)) row.push_back(parse_real(field, line_no));
        rows.push_back(std::move(row));
    }
    return validate_distance_matrix(rows);
}

DistanceMatrix read_distances_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_distances_csv(in);
}

std::string format_number(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

std::string diagram_csv(const PersistenceDiagram& diag) {
    std::string out = "k,birth,death,lifetime\n";
    for (const Interval& i : diag.intervals) {
        out += std::to_string(diag.dim) + "," + format_number(i.birth) + "," +
               format_number(i.death) + "," +
               (i.essential() ? std::string("inf") : format_number(i.lifetime())) + "\n";
    }
    return out;
}

namespace {

nlohmann::json dimension_json(const std::map<double, double>& values) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [q, v] : values) out[order_key(q)] = v;
    return out;
}

nlohmann::json stats_json(const SummaryStats& s) {
    return {{"min", s.min}, {"mean", s.mean}, {"max", s.max}, {"total", s.total}, {"count", s.count}};
}

}  // namespace

nlohmann::json report_json(const DiversityReport& r) {
    nlohmann::json j;
    j["peh"] = {{"h0", dimension_json(r.h0.hill)}, {"h1", dimension_json(r.h1.hill)}};
    j["entropy"] = {{"h0", dimension_json(r.h0.entropy)}, {"h1", dimension_json(r.h1.entropy)}};
    j["stats"] = {{"h0", stats_json(r.h0.stats)}, {"h1", stats_json(r.h1.stats)}};
    j["vendi_score"] = r.vendi ? nlohmann::json(*r.vendi) : nlohmann::json(nullptr);
    nlohmann::json meta = {
        {"metric", r.metric},
        {"points", r.points},
        {"eps_min", r.eps_min},
        {"eps_max", r.eps_max},
        {"diameter", r.diameter},
        {"windowed", r.windowed},
        {"zero_tol", r.zero_tol},
        {"essential_h0", r.h0.essential},
        {"essential_h1", r.h1.essential},
        {"raw_intervals_h0", r.h0.raw_intervals},
        {"raw_intervals_h1", r.h1.raw_intervals},
        {"essential_policy", "essential intervals are excluded from lifetime statistics"},
        {"zero_lifetime_policy", "finite intervals with lifetime <= zero_tol are dropped"},
        {"log_base", "e"},
        {"coefficients", "Z/2"},
    };
    if (r.windowed) meta["window_policy"] = "intervals intersected with [eps_min, eps_max]";
    if (!r.vendi) meta["vendi_unavailable"] = "Vendi Score needs point coordinates";
    j["meta"] = std::move(meta);
    return j;
}

std::string subset_csv(const SubsetResult& subset, const std::vector<Label>& labels) {
    std::string out = "index,label\n";
    for (std::size_t idx : subset.indices) {
        out += std::to_string(idx) + "," + std::to_string(labels.at(idx)) + "\n";
    }
    return out;
}

std::vector<std::size_t> read_subset_indices(const std::filesystem::path& path) {
    auto in = open_input(path);
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line) || split_fields(line).front() != "index") {
        throw InvalidInput("'" + path.string() + "' is not a subset file (missing index header)");
    }
    std::vector<std::size_t> out;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto field = split_fields(line).front();
        std::size_t idx = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), idx);
        if (ec != std::errc() || ptr != field.data() + field.size()) {
            throw InvalidInput(location(line_no) + "bad index '" + std::string(field) + "'");
        }
        out.push_back(idx);
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidInput("cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) throw InvalidInput("failed writing '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace phdiv::io
