#include "czekan/dataset.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace czekan {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

bool is_missing(const std::string& cell) {
    return cell.empty() || cell == "NA" || cell == "?";
}

bool parse_number(const std::string& cell, double& out) {
    const char* begin = cell.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    if (end != begin + cell.size() || cell.empty()) return false;
    return std::isfinite(out);
}

}  // namespace

Dataset load_csv(const std::string& path, const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw Error("empty file: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> header = split_line(line);
    if (header.empty()) throw Error("missing header row: " + path);

    int label_col = -1, id_col = -1;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (options.label_column && header[c] == *options.label_column) label_col = static_cast<int>(c);
        if (options.id_column && header[c] == *options.id_column) id_col = static_cast<int>(c);
    }
    if (options.label_column && label_col < 0)
        throw Error("label column not found: " + *options.label_column);
    if (options.id_column && id_col < 0)
        throw Error("id column not found: " + *options.id_column);

    std::vector<std::string> feature_names;
    std::vector<std::size_t> feature_cols;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (static_cast<int>(c) == label_col || static_cast<int>(c) == id_col) continue;
        feature_names.push_back(header[c]);
        feature_cols.push_back(c);
    }
    if (feature_names.empty()) throw Error("no feature columns in: " + path);

    std::vector<std::vector<double>> rows;
    std::vector<std::string> row_ids;
    std::vector<std::string> labels;
    std::size_t dropped = 0;
    std::size_t line_no = 1;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split_line(line);
        if (cells.size() != header.size())
            throw Error(path + ":" + std::to_string(line_no) + ": expected " +
                        std::to_string(header.size()) + " cells, got " + std::to_string(cells.size()));

        bool missing = false;
        std::vector<double> values;
        values.reserve(feature_cols.size());
        for (std::size_t c : feature_cols) {
            if (is_missing(cells[c])) {
                missing = true;
                break;
            }
            double v;
            if (!parse_number(cells[c], v))
                throw Error(path + ":" + std::to_string(line_no) + ": non-numeric cell '" +
                            cells[c] + "' in column " + header[c]);
            values.push_back(v);
        }
        if (missing) {
            if (options.missing_policy == MissingPolicy::error)
                throw Error(path + ":" + std::to_string(line_no) + ": missing value");
            ++dropped;
            continue;
        }

        rows.push_back(std::move(values));
        row_ids.push_back(id_col >= 0 ? cells[id_col] : "row" + std::to_string(line_no - 1));
        if (label_col >= 0) labels.push_back(cells[label_col]);
    }

    if (rows.empty()) throw Error("no usable rows in: " + path +
                                  (dropped ? " (all " + std::to_string(dropped) + " rows dropped)" : ""));

    // Ids must be unique; real files (the WBC one included) repeat them.
    std::unordered_map<std::string, int> seen;
    for (auto& id : row_ids) {
        int& count = seen[id];
        ++count;
        if (count > 1) id += "#" + std::to_string(count);
    }

    Dataset ds;
    ds.observations = Matrix(rows.size(), feature_cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < feature_cols.size(); ++c) ds.observations(r, c) = rows[r][c];
    ds.feature_names = std::move(feature_names);
    ds.row_ids = std::move(row_ids);
    if (label_col >= 0) ds.labels = std::move(labels);
    ds.dropped_rows = dropped;
    return ds;
}

std::pair<Dataset, ScalingSpec> zscore(const Dataset& ds) {
    const std::size_t n = ds.n();
    const std::size_t p = ds.dim();
    if (n < 2) throw Error("zscore needs at least 2 rows");

    ScalingSpec spec;
    spec.enabled = true;
    spec.per_feature_mean.resize(p);
    spec.per_feature_sd.resize(p);

    Dataset out = ds;
    for (std::size_t c = 0; c < p; ++c) {
        double mean = 0.0;
        for (std::size_t r = 0; r < n; ++r) mean += ds.observations(r, c);
        mean /= static_cast<double>(n);
        double ssq = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            const double d = ds.observations(r, c) - mean;
            ssq += d * d;
        }
        const double sd = std::sqrt(ssq / static_cast<double>(n - 1));
        if (sd == 0.0) throw ConstantFeatureError(ds.feature_names[c]);
        spec.per_feature_mean[c] = mean;
        spec.per_feature_sd[c] = sd;
        for (std::size_t r = 0; r < n; ++r)
            out.observations(r, c) = (ds.observations(r, c) - mean) / sd;
    }
    return {std::move(out), std::move(spec)};
}

}  // namespace czekan
