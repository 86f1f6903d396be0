#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "czekan/matrix.hpp"

namespace czekan {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown by zscore when a feature has zero sample variance.
class ConstantFeatureError : public Error {
public:
    explicit ConstantFeatureError(const std::string& feature)
        : Error("constant feature (sd = 0): " + feature), feature_name(feature) {}
    std::string feature_name;
};

/// Labeled observation matrix. Rows keep file order; seriation owns reordering.
struct Dataset {
    Matrix observations;                            // N x p
    std::vector<std::string> feature_names;         // p
    std::vector<std::string> row_ids;               // N, unique
    std::optional<std::vector<std::string>> labels; // N class labels when a label column was declared
    std::size_t dropped_rows = 0;                   // rows removed by the missing-value policy

    std::size_t n() const { return observations.rows(); }
    std::size_t dim() const { return observations.cols(); }
};

struct ScalingSpec {
    bool enabled = false;
    std::vector<double> per_feature_mean;
    std::vector<double> per_feature_sd;
};

enum class MissingPolicy { drop_row, error };

struct CsvOptions {
    std::optional<std::string> label_column;
    std::optional<std::string> id_column;
    MissingPolicy missing_policy = MissingPolicy::drop_row;
};

/// Load a comma-separated file with a header row. Cells that are empty, "NA"
/// or "?" count as missing and follow the policy; any other non-numeric cell
/// is an error. Duplicate ids are made unique with a "#k" suffix.
Dataset load_csv(const std::string& path, const CsvOptions& options = {});

/// Standardize every feature to sample mean 0 and sample sd 1 (N-1 denominator).
std::pair<Dataset, ScalingSpec> zscore(const Dataset& ds);

}  // namespace czekan
