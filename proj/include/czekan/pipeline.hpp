#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "czekan/changepoint.hpp"
#include "czekan/czek_matrix.hpp"
#include "czekan/dataset.hpp"
#include "czekan/distance.hpp"
#include "czekan/fuzzy.hpp"
#include "czekan/seriation.hpp"

namespace czekan {

/// Contiguous intervals over the seriated order, one cluster each.
struct ClusterResult {
    struct Interval {
        int start = 0;  // 1-based seriated positions, inclusive
        int end = 0;
    };
    std::vector<Interval> intervals;
    std::vector<int> labels;                 // cluster id per seriated position, 1..k_found
    std::vector<int> labels_original_order;  // cluster id per input row
    int k_requested = 0;
    int k_found = 0;
};

struct RunConfig {
    SeriationMethod method = SeriationMethod::olo_average;
    int n_classes = 5;
    std::vector<double> probs;  // empty = equally spaced
    CzekMode mode = CzekMode::symmetric;
    std::vector<double> column_group_fractions;  // asymmetric mode, empty = equal split
    FcmParams fcm;
    EDivParams ediv;
    bool scaling = true;
    std::uint64_t seed = 1;
    int spin_max_iter = 10;

    /// Push the top-level seed into the component substreams.
    void reseed(std::uint64_t s);
};

struct PipelineResult {
    ScalingSpec scaling;
    DistanceMatrix distances;
    Permutation permutation;
    CzekMatrix czek;
    MembershipMatrix membership;
    ChangePointSet changepoints;
    ClusterResult clusters;
    double u_m = 0.0;
    double path_len = 0.0;
};

/// The full clustering pass: scale, distances, seriation, discretization,
/// fuzzy memberships, change points, contiguous cluster intervals. Clusters
/// are numbered 1..k_found left to right along the seriated order; when the
/// significance test accepts fewer than K-1 change points, k_found < K.
PipelineResult czekanowski_cluster(const Dataset& ds, const RunConfig& cfg);

}  // namespace czekan
