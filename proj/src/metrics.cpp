#include "czekan/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace czekan {

ClassificationScores classification_scores(const ConfusionCounts& c) {
    if (c.total() <= 0) throw Error("empty confusion table");
    ClassificationScores s;
    const double tp = static_cast<double>(c.tp), tn = static_cast<double>(c.tn);
    const double fp = static_cast<double>(c.fp), fn = static_cast<double>(c.fn);

    s.accuracy = (tp + tn) / (tp + tn + fp + fn);
    if (c.tp + c.fp > 0) s.precision = tp / (tp + fp);
    if (c.tp + c.fn > 0) s.recall = tp / (tp + fn);
    if (2 * c.tp + c.fp + c.fn > 0) s.f1 = 2.0 * tp / (2.0 * tp + fp + fn);
    const double kappa_den = (tp + fp) * (fp + tn) + (tp + fn) * (fn + tn);
    if (kappa_den > 0) s.kappa = 2.0 * (tp * tn - fn * fp) / kappa_den;
    return s;
}

namespace {

// Accuracy of one assignment read off the cluster-by-class contingency table.
double assignment_accuracy(const std::vector<std::vector<long long>>& contingency,
                           const std::vector<int>& class_of_cluster, long long n) {
    long long hits = 0;
    for (std::size_t cl = 0; cl < contingency.size(); ++cl)
        hits += contingency[cl][class_of_cluster[cl]];
    return static_cast<double>(hits) / static_cast<double>(n);
}

}  // namespace

LabelMatch match_labels(const std::vector<int>& predicted_clusters,
                        const std::vector<std::string>& truth, int k) {
    if (predicted_clusters.size() != truth.size())
        throw Error("prediction/truth length mismatch");
    if (predicted_clusters.empty()) throw Error("match_labels needs observations");
    if (k < 1 || k > 8) throw Error("match_labels supports 1 <= k <= 8 clusters");

    std::set<std::string> class_set(truth.begin(), truth.end());
    std::vector<std::string> class_names(class_set.begin(), class_set.end());
    const std::size_t n_classes = class_names.size();

    std::map<std::string, int> class_index;
    for (std::size_t c = 0; c < n_classes; ++c) class_index[class_names[c]] = static_cast<int>(c);

    std::vector<std::vector<long long>> contingency(k, std::vector<long long>(n_classes, 0));
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const int cl = predicted_clusters[i];
        if (cl < 1 || cl > k) throw Error("cluster id out of range 1..k");
        ++contingency[cl - 1][class_index[truth[i]]];
    }

    const long long n = static_cast<long long>(truth.size());
    std::vector<int> best_assignment(k, 0);
    double best_accuracy = -1.0;

    if (static_cast<std::size_t>(k) <= n_classes) {
        // Injective assignments: permutations of classes taken k at a time.
        std::vector<int> classes(n_classes);
        std::iota(classes.begin(), classes.end(), 0);
        std::sort(classes.begin(), classes.end());
        do {
            std::vector<int> assignment(classes.begin(), classes.begin() + k);
            const double acc = assignment_accuracy(contingency, assignment, n);
            if (acc > best_accuracy) {
                best_accuracy = acc;
                best_assignment = assignment;
            }
        } while (std::next_permutation(classes.begin(), classes.end()));
    } else {
        // More clusters than classes: the accuracy-optimal labelling is each
        // cluster's majority class, independently.
        for (int cl = 0; cl < k; ++cl) {
            int best_class = 0;
            for (std::size_t c = 1; c < n_classes; ++c)
                if (contingency[cl][c] > contingency[cl][best_class])
                    best_class = static_cast<int>(c);
            best_assignment[cl] = best_class;
        }
        best_accuracy = assignment_accuracy(contingency, best_assignment, n);
    }

    LabelMatch match;
    match.accuracy = best_accuracy;
    match.class_names = class_names;
    for (int cl = 0; cl < k; ++cl) match.assignment[cl + 1] = class_names[best_assignment[cl]];
    match.predicted.reserve(truth.size());
    for (int cl : predicted_clusters) match.predicted.push_back(match.assignment.at(cl));

    match.per_class.resize(n_classes);
    for (std::size_t i = 0; i < truth.size(); ++i) {
        for (std::size_t c = 0; c < n_classes; ++c) {
            const bool actual_pos = truth[i] == class_names[c];
            const bool predicted_pos = match.predicted[i] == class_names[c];
            auto& counts = match.per_class[c];
            if (actual_pos && predicted_pos)
                ++counts.tp;
            else if (!actual_pos && !predicted_pos)
                ++counts.tn;
            else if (predicted_pos)
                ++counts.fp;
            else
                ++counts.fn;
        }
    }
    return match;
}

// Both arrangement scores accumulate terms paired from the two ends of each
// diagonal. Reversing the permutation maps each pair onto itself, so the
// floating-point sum (not just the exact value) is reversal-invariant.

double u_m_factor(const DistanceMatrix& w, const Permutation& pi) {
    if (pi.size() != w.size() || !pi.is_valid()) throw Error("invalid permutation");
    const std::size_t n = w.size();
    double sum = 0.0;
    for (std::size_t gap = 1; gap < n; ++gap) {
        const double gap_sq = static_cast<double>(gap) * static_cast<double>(gap);
        const auto term = [&](std::size_t j) {
            return gap_sq / (w(pi.order[j + gap], pi.order[j]) + 1.0);
        };
        const std::size_t count = n - gap;
        double sub = 0.0;
        for (std::size_t j = 0; 2 * j + 1 < count; ++j) sub += term(j) + term(count - 1 - j);
        if (count % 2 == 1) sub += term(count / 2);
        sum += sub;
    }
    return 2.0 / (static_cast<double>(n) * static_cast<double>(n)) * sum;
}

double path_length(const DistanceMatrix& w, const Permutation& pi) {
    if (pi.size() != w.size() || !pi.is_valid()) throw Error("invalid permutation");
    const std::size_t n = pi.size();
    if (n < 2) return 0.0;
    const auto step = [&](std::size_t i) { return w(pi.order[i], pi.order[i + 1]); };
    const std::size_t count = n - 1;
    double sum = 0.0;
    for (std::size_t i = 0; 2 * i + 1 < count; ++i) sum += step(i) + step(count - 1 - i);
    if (count % 2 == 1) sum += step(count / 2);
    return sum;
}

}  // namespace czekan
