#pragma once

#include <cstdint>
#include <vector>

#include "czekan/czek_matrix.hpp"
#include "czekan/matrix.hpp"

namespace czekan {

enum class FcmInit {
    spread,  // centroids at k evenly spaced input rows (stable on seriated data)
    random,  // k distinct rows drawn from the seed
};

struct FcmParams {
    int k = 2;
    double fuzziness = 2.0;        // m > 1 in the objective
    int max_iter = 100;
    double tol = 1e-6;             // max membership change between iterations
    std::uint64_t seed = 1;
    FcmInit init = FcmInit::spread;

    void validate() const;
};

/// K x N column-stochastic membership matrix plus the fitted centroids.
struct MembershipMatrix {
    Matrix values;     // K x N, columns sum to 1
    Matrix centroids;  // K x dim
    bool converged = false;
    int iterations = 0;
    std::vector<double> objective_trace;       // J_m after each iteration
    double max_column_sum_error = 0.0;         // worst |column sum - 1| seen across iterations

    std::size_t k() const { return values.rows(); }
    std::size_t n() const { return values.cols(); }
};

/// Fuzzy C-means over arbitrary points (one row per point).
MembershipMatrix fcm_points(const Matrix& points, const FcmParams& params);

/// Fuzzy C-means over the rows of the discretized matrix, treated as real
/// vectors. The spread initialization picks rows at seriated positions
/// ceil((2t-1) N / (2k)).
MembershipMatrix fcm(const CzekMatrix& dprime, const FcmParams& params);

}  // namespace czekan
