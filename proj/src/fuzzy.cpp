#include "czekan/fuzzy.hpp"

#include <algorithm>
#include <cmath>

#include "czekan/rng.hpp"

namespace czekan {

void FcmParams::validate() const {
    if (k < 2) throw Error("fcm needs k >= 2");
    if (fuzziness <= 1.0) throw Error("fuzziness must be > 1");
    if (max_iter < 1) throw Error("max_iter must be >= 1");
    if (tol <= 0.0) throw Error("tol must be > 0");
}

namespace {

double sq_distance(std::span<const double> a, std::span<const double> b) {
    double ssq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        ssq += d * d;
    }
    return ssq;
}

Matrix initial_centroids(const Matrix& points, const FcmParams& params) {
    const std::size_t n = points.rows();
    const std::size_t dim = points.cols();
    const std::size_t k = static_cast<std::size_t>(params.k);
    Matrix centroids(k, dim);

    std::vector<std::size_t> rows;
    if (params.init == FcmInit::spread) {
        for (std::size_t t = 1; t <= k; ++t) {
            // 1-based row ceil((2t-1) N / (2k))
            const std::size_t num = (2 * t - 1) * n;
            const std::size_t den = 2 * k;
            rows.push_back((num + den - 1) / den - 1);
        }
    } else {
        Rng rng(derive_seed(params.seed, 0x46434dULL));  // "FCM"
        std::vector<int> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<int>(i);
        rng.shuffle(pool);
        for (std::size_t t = 0; t < k; ++t) rows.push_back(static_cast<std::size_t>(pool[t]));
        std::sort(rows.begin(), rows.end());
    }

    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t c = 0; c < dim; ++c) centroids(j, c) = points(rows[j], c);
    return centroids;
}

}  // namespace

MembershipMatrix fcm_points(const Matrix& points, const FcmParams& params) {
    params.validate();
    const std::size_t n = points.rows();
    const std::size_t dim = points.cols();
    const std::size_t k = static_cast<std::size_t>(params.k);
    if (n < k) throw Error("fcm needs at least k points");

    const double m = params.fuzziness;
    const double exponent = 2.0 / (m - 1.0);

    MembershipMatrix result;
    result.centroids = initial_centroids(points, params);
    result.values = Matrix(k, n);
    Matrix previous(k, n);
    Matrix dist_sq(k, n);

    for (int iter = 1; iter <= params.max_iter; ++iter) {
        // Membership update: u_ij = 1 / sum_l (d_ij / d_il)^(2/(m-1)),
        // with all mass on zero-distance centroids when any d_ij = 0.
        for (std::size_t i = 0; i < n; ++i) {
            int zero_count = 0;
            for (std::size_t j = 0; j < k; ++j) {
                dist_sq(j, i) = sq_distance(points.row(i), result.centroids.row(j));
                if (dist_sq(j, i) == 0.0) ++zero_count;
            }
            if (zero_count > 0) {
                for (std::size_t j = 0; j < k; ++j)
                    result.values(j, i) = dist_sq(j, i) == 0.0 ? 1.0 / zero_count : 0.0;
                continue;
            }
            for (std::size_t j = 0; j < k; ++j) {
                double sum = 0.0;
                for (std::size_t l = 0; l < k; ++l)
                    sum += std::pow(dist_sq(j, i) / dist_sq(l, i), exponent / 2.0);
                result.values(j, i) = 1.0 / sum;
            }
        }

        // Centroid update: c_j = sum_i u_ij^m x_i / sum_i u_ij^m.
        for (std::size_t j = 0; j < k; ++j) {
            double weight_sum = 0.0;
            auto row = result.centroids.row(j);
            std::fill(row.begin(), row.end(), 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                const double pw = std::pow(result.values(j, i), m);
                weight_sum += pw;
                const auto x = points.row(i);
                for (std::size_t c = 0; c < dim; ++c) row[c] += pw * x[c];
            }
            if (weight_sum > 0.0)
                for (std::size_t c = 0; c < dim; ++c) row[c] /= weight_sum;
        }

        double objective = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j)
                objective += std::pow(result.values(j, i), m) *
                             sq_distance(points.row(i), result.centroids.row(j));
        result.objective_trace.push_back(objective);

        for (std::size_t i = 0; i < n; ++i) {
            double col_sum = 0.0;
            for (std::size_t j = 0; j < k; ++j) col_sum += result.values(j, i);
            result.max_column_sum_error =
                std::max(result.max_column_sum_error, std::abs(col_sum - 1.0));
        }

        result.iterations = iter;
        if (iter > 1) {
            double delta = 0.0;
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t i = 0; i < n; ++i)
                    delta = std::max(delta, std::abs(result.values(j, i) - previous(j, i)));
            if (delta < params.tol) {
                result.converged = true;
                break;
            }
        }
        previous = result.values;
    }
    return result;
}

MembershipMatrix fcm(const CzekMatrix& dprime, const FcmParams& params) {
    const std::size_t n = dprime.size();
    Matrix points(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) points(i, j) = static_cast<double>(dprime.classes(i, j));
    return fcm_points(points, params);
}

}  // namespace czekan
