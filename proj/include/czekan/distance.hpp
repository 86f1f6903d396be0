#pragma once

#include <string>

#include "czekan/dataset.hpp"
#include "czekan/matrix.hpp"

namespace czekan {

/// Symmetric N x N nonnegative matrix with zero diagonal.
struct DistanceMatrix {
    Matrix values;
    std::string metric_name;

    std::size_t size() const { return values.rows(); }
    double operator()(std::size_t i, std::size_t j) const { return values(i, j); }
};

enum class Metric { euclidean };

/// Pairwise distances between dataset rows. Row blocks are computed in
/// parallel; entries are written once each, so the result does not depend on
/// the worker count.
DistanceMatrix distance_matrix(const Dataset& ds, Metric metric = Metric::euclidean);

/// Build a DistanceMatrix directly from a full matrix of values (tests,
/// synthetic inputs). Validates symmetry, zero diagonal and nonnegativity.
DistanceMatrix distance_matrix_from_values(Matrix values, std::string metric_name = "custom");

}  // namespace czekan
