#include "czekan/render.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace czekan {

std::vector<double> DiagramStyle::default_radii(int n_classes, double cell_px) {
    std::vector<double> radii(n_classes);
    const double r_max = 0.45 * cell_px;
    for (int c = 1; c <= n_classes; ++c)
        radii[c - 1] = r_max * static_cast<double>(n_classes - c + 1) / n_classes;
    return radii;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::vector<double> checked_radii(const CzekMatrix& dprime, const DiagramStyle& style) {
    std::vector<double> radii = style.radii.empty()
                                    ? DiagramStyle::default_radii(dprime.n_classes, style.cell_px)
                                    : style.radii;
    if (static_cast<int>(radii.size()) != dprime.n_classes)
        throw Error("style needs one radius per class");
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (radii[i] >= radii[i - 1]) throw Error("radii must be strictly decreasing");
    return radii;
}

}  // namespace

void render_svg(const CzekMatrix& dprime, const std::optional<ClusterResult>& clusters,
                const DiagramStyle& style, const std::string& out_path,
                const std::vector<std::string>& row_ids, const std::string& metadata) {
    const std::size_t n = dprime.size();
    const std::vector<double> radii = checked_radii(dprime, style);
    const double cell = style.cell_px;
    const double margin = style.show_labels ? 8.0 * style.label_font_px : 4.0;
    const double grid = static_cast<double>(n) * cell;
    const double width = margin + grid + 4.0;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(width) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(width)
        << "\">\n";
    if (!metadata.empty()) svg << "<desc>" << xml_escape(metadata) << "</desc>\n";
    svg << "<rect x=\"" << fmt(margin) << "\" y=\"" << fmt(margin) << "\" width=\"" << fmt(grid)
        << "\" height=\"" << fmt(grid) << "\" fill=\"white\" stroke=\"#888\" stroke-width=\"0.5\"/>\n";

    // Cluster shading sits under the dots: one square block per interval,
    // on the diagonal.
    if (clusters) {
        for (std::size_t idx = 0; idx < clusters->intervals.size(); ++idx) {
            const auto& interval = clusters->intervals[idx];
            const double offset = margin + (interval.start - 1) * cell;
            const double span = (interval.end - interval.start + 1) * cell;
            const std::string& color =
                style.cluster_colors[idx % style.cluster_colors.size()];
            svg << "<rect class=\"cluster-shade\" x=\"" << fmt(offset) << "\" y=\"" << fmt(offset)
                << "\" width=\"" << fmt(span) << "\" height=\"" << fmt(span) << "\" fill=\"" << color
                << "\" fill-opacity=\"0.55\"/>\n";
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int cls = dprime.classes(i, j);
            if (style.blank_last_class && cls == dprime.n_classes) continue;
            const double cx = margin + (static_cast<double>(j) + 0.5) * cell;
            const double cy = margin + (static_cast<double>(i) + 0.5) * cell;
            svg << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\""
                << fmt(radii[cls - 1]) << "\" fill=\"#222\"/>\n";
        }
    }

    if (style.show_labels && !row_ids.empty()) {
        for (std::size_t pos = 0; pos < n; ++pos) {
            const std::string id = xml_escape(row_ids[dprime.permutation.order[pos]]);
            const double center = margin + (static_cast<double>(pos) + 0.5) * cell;
            svg << "<text x=\"" << fmt(margin - 2.0) << "\" y=\""
                << fmt(center + style.label_font_px / 3.0) << "\" font-size=\""
                << fmt(style.label_font_px) << "\" text-anchor=\"end\" font-family=\"monospace\">"
                << id << "</text>\n";
            svg << "<text x=\"" << fmt(center) << "\" y=\"" << fmt(margin - 2.0) << "\" font-size=\""
                << fmt(style.label_font_px)
                << "\" text-anchor=\"start\" font-family=\"monospace\" transform=\"rotate(-90 "
                << fmt(center) << " " << fmt(margin - 2.0) << ")\">" << id << "</text>\n";
        }
    }

    svg << "</svg>\n";

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + out_path);
    out << svg.str();
    if (!out) throw Error("write failed: " + out_path);
}

std::string render_ascii(const CzekMatrix& dprime, const std::optional<ClusterResult>& clusters) {
    const std::size_t n = dprime.size();
    if (n > 200) throw Error("ascii diagram limited to 200 observations");
    static const std::array<const char*, 5> ramp = {"●", "◉", "○", "·", " "};
    if (dprime.n_classes > static_cast<int>(ramp.size()))
        throw Error("ascii ramp supports at most 5 classes");

    std::set<int> boundaries;  // separator after this 1-based row/column
    if (clusters)
        for (const auto& interval : clusters->intervals)
            if (interval.end < static_cast<int>(n)) boundaries.insert(interval.end);

    std::string out;
    auto emit_separator = [&] {
        for (std::size_t j = 1; j <= n; ++j) {
            out += '-';
            if (boundaries.count(static_cast<int>(j))) out += '+';
        }
        out += '\n';
    };

    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            out += ramp[dprime.classes(i - 1, j - 1) - 1];
            if (boundaries.count(static_cast<int>(j))) out += '|';
        }
        out += '\n';
        if (boundaries.count(static_cast<int>(i))) emit_separator();
    }
    return out;
}

}  // namespace czekan
