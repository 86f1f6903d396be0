#pragma once

#include <string>
#include <vector>

#include "czekan/distance.hpp"
#include "czekan/matrix.hpp"
#include "czekan/seriation.hpp"

namespace czekan {

enum class CzekMode { symmetric, asymmetric };

/// Seriated distance matrix discretized into integer classes, 1 = closest.
/// Cell (i, j) describes the observation pair at seriated positions i and j.
struct CzekMatrix {
    IntMatrix classes;                              // N x N, entries in 1..n_classes
    Permutation permutation;
    int n_classes = 0;
    CzekMode mode = CzekMode::symmetric;
    std::vector<double> breaks;                     // symmetric: n_classes - 1 thresholds
    std::vector<std::vector<double>> column_breaks; // asymmetric: per-column thresholds
    std::vector<std::string> warnings;

    std::size_t size() const { return classes.rows(); }
};

/// Equally spaced quantile levels i/n_classes, i = 1..n_classes-1.
std::vector<double> default_probs(int n_classes);

/// Linear-interpolation empirical quantile (the common "type 7" rule) of
/// sorted values at level p.
double quantile_type7(const std::vector<double>& sorted_values, double p);

/// Discretize by global quantile breaks over the off-diagonal distances:
/// class(i,j) = 1 + #{breaks < distance}, diagonal forced to class 1.
CzekMatrix czek_symmetric(const DistanceMatrix& w, const Permutation& pi, int n_classes,
                          const std::vector<double>& probs = {});

/// Czekanowski's original column-wise grouping: per column, rank all rows by
/// distance to the focal observation and hand out classes in blocks of
/// ceil(fraction * N) rows.
CzekMatrix czek_asymmetric(const DistanceMatrix& w, const Permutation& pi, int n_classes,
                           const std::vector<double>& column_group_fractions = {});

}  // namespace czekan
