#include "czekan/distance.hpp"

#include <cmath>

#include "czekan/parallel.hpp"

namespace czekan {

DistanceMatrix distance_matrix(const Dataset& ds, Metric metric) {
    (void)metric;  // euclidean is the only metric for now
    const std::size_t n = ds.n();
    const std::size_t p = ds.dim();
    Matrix w(n, n, 0.0);
    const Matrix& x = ds.observations;

    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                double ssq = 0.0;
                for (std::size_t c = 0; c < p; ++c) {
                    const double d = x(i, c) - x(j, c);
                    ssq += d * d;
                }
                const double dist = std::sqrt(ssq);
                w(i, j) = dist;
                w(j, i) = dist;
            }
        }
    });

    return {std::move(w), "euclidean"};
}

DistanceMatrix distance_matrix_from_values(Matrix values, std::string metric_name) {
    const std::size_t n = values.rows();
    if (values.cols() != n) throw Error("distance matrix must be square");
    for (std::size_t i = 0; i < n; ++i) {
        if (values(i, i) != 0.0) throw Error("distance matrix diagonal must be zero");
        for (std::size_t j = 0; j < i; ++j) {
            if (values(i, j) != values(j, i)) throw Error("distance matrix must be symmetric");
            if (values(i, j) < 0.0) throw Error("distances must be nonnegative");
        }
    }
    return {std::move(values), std::move(metric_name)};
}

}  // namespace czekan
