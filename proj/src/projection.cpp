#include "phdiv/projection.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

#include "phdiv/errors.hpp"

namespace phdiv {

Embedding classical_mds(const DistanceMatrix& dist, std::size_t dim) {
    const std::size_t n = dist.size();
    if (dim < 1 || dim > 3) throw InvalidInput("MDS dimension must be 1, 2 or 3");
    if (n < dim + 1) {
        throw InvalidInput("MDS into " + std::to_string(dim) + " axes needs at least " +
                           std::to_string(dim + 1) + " points");
    }

    // B = -1/2 J D^2 J, computed by subtracting row, column and grand means.
    Eigen::MatrixXd sq(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double d = dist(i, j);
            sq(i, j) = d * d;
        }
    }
    const Eigen::VectorXd row_mean = sq.rowwise().mean();
    const double grand_mean = row_mean.mean();
    Eigen::MatrixXd gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            gram(i, j) = -0.5 * (sq(i, j) - row_mean[i] - row_mean[j] + grand_mean);
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
    if (solver.info() != Eigen::Success) {
        throw EigenFailure("symmetric eigensolver did not converge");
    }
    // Eigen sorts eigenvalues ascending.
    const Eigen::VectorXd& values = solver.eigenvalues();
    const Eigen::MatrixXd& vectors = solver.eigenvectors();

    Embedding out;
    out.dim = dim;
    out.coords.assign(n * dim, 0.0);

    const double scale = values.cwiseAbs().maxCoeff();
    out.non_euclidean = values.minCoeff() < -1e-9 * std::max(1.0, scale);

    double total_sq = 0.0;
    for (Eigen::Index i = 0; i < values.size(); ++i) total_sq += values[i] * values[i];
    double kept_sq = 0.0;

    for (std::size_t axis = 0; axis < dim; ++axis) {
        const Eigen::Index col = static_cast<Eigen::Index>(n - 1 - axis);
        const double lambda = values[col];
        kept_sq += lambda * lambda;
        const double kept = lambda > 0.0 ? lambda : 0.0;
        out.eigenvalues.push_back(kept);
        const double root = std::sqrt(kept);

        std::size_t extreme = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (std::abs(vectors(i, col)) > std::abs(vectors(extreme, col))) extreme = i;
        }
        const double sign = vectors(extreme, col) < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            out.coords[i * dim + axis] = sign * root * vectors(i, col);
        }
    }
    out.stress = total_sq > 0.0 ? std::sqrt(std::max(0.0, total_sq - kept_sq) / total_sq) : 0.0;
    return out;
}

namespace {

std::string xml_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string marker(const std::string& group, double x, double y, const std::string& color) {
    std::ostringstream s;
    if (group == "closest") {
        s << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"" << color << "\"/>";
    } else if (group == "farthest") {
        s << "<rect x=\"" << x - 4.5 << "\" y=\"" << y - 4.5
          << "\" width=\"9\" height=\"9\" fill=\"" << color << "\"/>";
    } else if (group == "random") {
        s << "<polygon points=\"" << x << "," << y - 6 << " " << x - 5.5 << "," << y + 4.5 << " "
          << x + 5.5 << "," << y + 4.5 << "\" fill=\"" << color << "\"/>";
    } else {
        s << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"2.5\" fill=\"" << color
          << "\" fill-opacity=\"0.35\"/>";
    }
    return s.str();
}

}  // namespace

std::string render_scatter_svg(std::span<const PlotPoint> points, const std::string& title) {
    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                     "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
    constexpr double kWidth = 800, kHeight = 600, kMargin = 50, kLegend = 150;

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (!points.empty()) {
        xmin = xmax = points[0].x;
        ymin = ymax = points[0].y;
        for (const auto& p : points) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
    const double plot_w = kWidth - 2 * kMargin - kLegend;
    const double plot_h = kHeight - 2 * kMargin;
    const double unit = std::min(plot_w, plot_h) / span;
    const auto px = [&](double x) { return kMargin + (x - xmin) * unit; };
    const auto py = [&](double y) { return kHeight - kMargin - (y - ymin) * unit; };

    std::map<Label, std::string> colors;
    for (const auto& p : points) {
        if (p.label && !colors.count(*p.label)) {
            colors[*p.label] = kPalette[colors.size() % std::size(kPalette)];
        }
    }
    std::vector<std::string> groups;
    for (const auto& p : points) {
        if (std::find(groups.begin(), groups.end(), p.group) == groups.end()) groups.push_back(p.group);
    }
    std::sort(groups.begin(), groups.end());

    std::ostringstream svg;
    svg.precision(6);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" "
           "height=\"600\">\n";
    svg << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    svg << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">"
        << xml_escape(title) << "</text>\n";
    // Background points first so subset members stay visible.
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& p : points) {
            if ((pass == 0) != p.group.empty()) continue;
            const std::string color = p.label ? colors[*p.label] : "#333333";
            svg << marker(p.group, px(p.x), py(p.y), color) << "\n";
        }
    }

    double ly = kMargin + 10;
    const double lx = kWidth - kLegend + 10;
    svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (const auto& g : groups) {
        svg << marker(g, lx, ly, "#555555") << "<text x=\"" << lx + 14 << "\" y=\"" << ly + 4
            << "\">" << (g.empty() ? "all points" : xml_escape(g)) << "</text>\n";
        ly += 22;
    }
    for (const auto& [label, color] : colors) {
        svg << "<rect x=\"" << lx - 5 << "\" y=\"" << ly - 5 << "\" width=\"10\" height=\"10\" fill=\""
            << color << "\"/><text x=\"" << lx + 14 << "\" y=\"" << ly + 4 << "\">class " << label
            << "</text>\n";
        ly += 22;
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace phdiv
