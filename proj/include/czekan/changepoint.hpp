#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "czekan/fuzzy.hpp"
#include "czekan/matrix.hpp"

namespace czekan {

struct EDivParams {
    double sig_level = 0.05;                 // p0
    int n_perm = 199;                        // R permutation replicates
    int min_size = 2;                        // minimum segment length
    double alpha = 1.0;                      // moment index in (0, 2]
    std::optional<int> max_changepoints;     // stop after this many acceptances
    std::uint64_t seed = 1;

    void validate() const;
};

/// Accepted change points. A location tau (1-based) means a new segment
/// starts at position tau; lists are aligned and sorted by location.
struct ChangePointSet {
    std::vector<int> locations;
    std::vector<double> p_values;
    std::vector<double> test_stats;
};

/// Scaled two-sample energy divergence
///   Q = (n m / (n + m)) * (2/(nm) sum |a-b|^alpha
///                          - C(n,2)^-1 sum_{i<j} |a-a'|^alpha
///                          - C(m,2)^-1 sum_{i<j} |b-b'|^alpha)
/// with Euclidean norms; a single-element within-segment sum is 0.
double energy_stat(const std::vector<std::vector<double>>& segment_a,
                   const std::vector<std::vector<double>>& segment_b, double alpha);

/// E-divisive on a sequence of points (one row per observation): repeatedly
/// split the segment/position pair with the largest statistic, keep it if a
/// within-segment permutation test gives p-hat < sig_level, stop otherwise.
ChangePointSet e_divisive_points(const Matrix& sequence, const EDivParams& params);

/// Same, over the columns of a membership matrix in sequence order.
ChangePointSet e_divisive(const MembershipMatrix& m, const EDivParams& params);

}  // namespace czekan
