#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "czekan/distance.hpp"
#include "czekan/seriation.hpp"

namespace czekan {

struct ConfusionCounts {
    long long tp = 0;
    long long tn = 0;
    long long fp = 0;
    long long fn = 0;

    long long total() const { return tp + tn + fp + fn; }
};

/// Rates derived from one confusion table; zero-denominator scores stay unset
/// rather than being silently zeroed.
struct ClassificationScores {
    double accuracy = 0.0;
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> f1;
    std::optional<double> kappa;
};

ClassificationScores classification_scores(const ConfusionCounts& c);

/// Result of exhaustively matching predicted clusters to true classes.
struct LabelMatch {
    std::map<int, std::string> assignment;               // cluster id -> class name
    double accuracy = 0.0;
    std::vector<std::string> class_names;                // sorted unique truth classes
    std::vector<ConfusionCounts> per_class;              // aligned with class_names, each as positive
    std::vector<std::string> predicted;                  // per observation, after assignment
};

/// Search every feasible cluster-to-class assignment (k! for k <= 8) and keep
/// the one with the highest accuracy. `predicted_clusters` holds cluster ids
/// per observation, `truth` the class labels in the same order.
LabelMatch match_labels(const std::vector<int>& predicted_clusters,
                        const std::vector<std::string>& truth, int k);

/// Arrangement score (2/n^2) sum_{j<i} (i-j)^2 / (W[pi(i)][pi(j)] + 1);
/// the +1 keeps zero distances finite.
double u_m_factor(const DistanceMatrix& w, const Permutation& pi);

/// Sum of consecutive seriated distances sum_i W[pi(i)][pi(i+1)].
double path_length(const DistanceMatrix& w, const Permutation& pi);

}  // namespace czekan
