#include <doctest.h>

#include <cmath>

#include "czekan/fuzzy.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace czekan;

namespace {

Matrix column(const std::vector<double>& xs) {
    Matrix m(xs.size(), 1);
    for (std::size_t i = 0; i < xs.size(); ++i) m(i, 0) = xs[i];
    return m;
}

}  // namespace

TEST_SUITE("fuzzy") {

TEST_CASE("two points with centroids at the points stay crisp") {
    FcmParams params;
    params.k = 2;
    const MembershipMatrix m = fcm_points(column({0.0, 7.0}), params);
    CHECK(m.values(0, 0) == 1.0);
    CHECK(m.values(1, 0) == 0.0);
    CHECK(m.values(1, 1) == 1.0);
    CHECK(m.values(0, 1) == 0.0);
    CHECK(m.converged);
}

TEST_CASE("a point equidistant from both centroids splits 0.5/0.5") {
    // Symmetric input keeps the centroids mirrored, so the middle point stays
    // exactly balanced through every update.
    FcmParams params;
    params.k = 2;
    const MembershipMatrix m = fcm_points(column({-1.0, 0.0, 1.0}), params);
    CHECK(m.values(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m.values(1, 1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("1-D {0,1,9,10} matches the straight-loop oracle fixed point") {
    const Matrix points = column({0.0, 1.0, 9.0, 10.0});
    FcmParams params;
    params.k = 2;
    params.tol = 1e-10;
    params.max_iter = 2000;
    const MembershipMatrix m = fcm_points(points, params);

    // Frozen from the oracle run to 1e-13 convergence.
    const double expected_u0[4] = {0.9972405821123184, 0.9965483618582733,
                                   0.0034516381417259, 0.0027594178876822};
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(m.values(0, i) - expected_u0[i]) < 1e-6);
        CHECK(std::abs(m.values(1, i) - (1.0 - expected_u0[i])) < 1e-6);
    }
    CHECK(std::abs(m.centroids(0, 0) - 0.4997401579217481) < 1e-6);
    CHECK(std::abs(m.centroids(1, 0) - 9.5002598420782520) < 1e-6);

    // And against the live oracle.
    const auto reference = oracle::naive_fcm(points, 2, 2.0, 1e-12, 100000);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 4; ++i)
            CHECK(std::abs(m.values(j, i) - reference.memberships(j, i)) < 1e-6);
}

TEST_CASE("columns stay stochastic and the objective never increases") {
    Rng rng(2);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 5 + rng.bounded(20);
        const std::size_t dim = 1 + rng.bounded(4);
        FcmParams params;
        params.k = 2 + static_cast<int>(rng.bounded(2));
        if (static_cast<std::size_t>(params.k) > n) params.k = 2;
        const MembershipMatrix m = fcm_points(test::random_points(rng, n, dim, 3.0), params);
        CHECK(m.max_column_sum_error < 1e-9);
        for (double u : m.values.data()) {
            CHECK(u >= 0.0);
            CHECK(u <= 1.0);
        }
        for (std::size_t t = 1; t < m.objective_trace.size(); ++t)
            CHECK(m.objective_trace[t] <= m.objective_trace[t - 1] + 1e-9);
    }
}

TEST_CASE("zero-distance guard puts all mass on the coincident centroid") {
    // Duplicated point at 0 equals the first spread centroid forever.
    FcmParams params;
    params.k = 2;
    params.max_iter = 1;
    const MembershipMatrix m = fcm_points(column({0.0, 0.0, 8.0, 9.0}), params);
    CHECK(m.values(0, 0) == 1.0);
    CHECK(m.values(1, 0) == 0.0);
}

TEST_CASE("random init is deterministic given the seed") {
    Rng rng(33);
    const Matrix points = test::random_points(rng, 12, 2);
    FcmParams params;
    params.k = 3;
    params.init = FcmInit::random;
    params.seed = 55;
    const MembershipMatrix a = fcm_points(points, params);
    const MembershipMatrix b = fcm_points(points, params);
    CHECK(a.values == b.values);
    CHECK(a.centroids == b.centroids);
}

TEST_CASE("non-convergence is flagged, not thrown") {
    Rng rng(44);
    FcmParams params;
    params.k = 2;
    params.max_iter = 1;
    const MembershipMatrix m = fcm_points(test::random_points(rng, 10, 2), params);
    CHECK(!m.converged);
    CHECK(m.iterations == 1);
}

TEST_CASE("parameter validation") {
    FcmParams params;
    params.k = 1;
    CHECK_THROWS_AS(params.validate(), Error);
    params.k = 2;
    params.fuzziness = 1.0;
    CHECK_THROWS_AS(params.validate(), Error);
    params.fuzziness = 2.0;
    params.tol = 0.0;
    CHECK_THROWS_AS(params.validate(), Error);

    FcmParams ok;
    ok.k = 5;
    CHECK_THROWS_AS(fcm_points(column({1.0, 2.0}), ok), Error);  // k > N
}

TEST_CASE("fcm over a discretized matrix treats its rows as points") {
    Rng rng(9);
    const DistanceMatrix w = test::random_distance_matrix(rng, 8);
    Permutation pi;
    pi.order = {0, 1, 2, 3, 4, 5, 6, 7};
    const CzekMatrix czek = czek_symmetric(w, pi, 3);

    FcmParams params;
    params.k = 2;
    const MembershipMatrix via_czek = fcm(czek, params);

    Matrix as_points(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) as_points(i, j) = czek.classes(i, j);
    const MembershipMatrix direct = fcm_points(as_points, params);
    CHECK(via_czek.values == direct.values);
}

}  // TEST_SUITE
