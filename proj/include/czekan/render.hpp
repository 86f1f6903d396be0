#pragma once

#include <optional>
#include <string>
#include <vector>

#include "czekan/czek_matrix.hpp"
#include "czekan/pipeline.hpp"

namespace czekan {

/// Visual parameters for the dot diagram. Class 1 draws the largest dot;
/// the last class is left blank by default (classic diagram style).
struct DiagramStyle {
    double cell_px = 12.0;
    std::vector<double> radii;          // per class, strictly decreasing; empty = derived
    std::vector<std::string> cluster_colors = {"#9ecae1", "#fdae6b", "#a1d99b",
                                               "#bcbddc", "#fc9272", "#c7e9c0"};
    double label_font_px = 8.0;
    bool show_labels = false;
    bool blank_last_class = true;

    /// radius_c = r_max (n_classes - c + 1) / n_classes with r_max = 0.45 cell.
    static std::vector<double> default_radii(int n_classes, double cell_px);
};

/// Write the diagram as SVG 1.1: optional shaded diagonal blocks per cluster,
/// then one dot per cell sized by class, with row ids in seriated order when
/// labels are on. A non-empty `metadata` string is embedded as the <desc>
/// element (used for the run-config audit trail).
void render_svg(const CzekMatrix& dprime, const std::optional<ClusterResult>& clusters,
                const DiagramStyle& style, const std::string& out_path,
                const std::vector<std::string>& row_ids = {}, const std::string& metadata = "");

/// One glyph per cell from the fixed ramp (largest to blank); cluster
/// boundaries become separator lines. Limited to n_classes <= 5 and N <= 200.
std::string render_ascii(const CzekMatrix& dprime,
                         const std::optional<ClusterResult>& clusters = std::nullopt);

}  // namespace czekan
