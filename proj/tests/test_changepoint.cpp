#include <doctest.h>

#include <cmath>

#include "czekan/changepoint.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace czekan;

namespace {

std::vector<std::vector<double>> random_segment(Rng& rng, std::size_t len, std::size_t dim,
                                                double shift = 0.0) {
    std::vector<std::vector<double>> seg(len, std::vector<double>(dim));
    for (auto& row : seg)
        for (double& v : row) v = rng.gaussian() + shift;
    return seg;
}

}  // namespace

TEST_SUITE("changepoint") {

TEST_CASE("identical constant segments have zero divergence") {
    const std::vector<std::vector<double>> a(3, {2.0, -1.0});
    CHECK(energy_stat(a, a, 1.0) == 0.0);
    CHECK(energy_stat({{5.0}}, {{5.0}}, 1.5) == 0.0);
}

TEST_CASE("hand-evaluated two-by-two case") {
    const std::vector<std::vector<double>> a = {{0.0}, {0.0}};
    const std::vector<std::vector<double>> b = {{1.0}, {1.0}};
    CHECK(energy_stat(a, b, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("energy_stat matches the quadruple-loop oracle on 100 random pairs") {
    Rng rng(314);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t dim = 1 + rng.bounded(3);
        const auto a = random_segment(rng, 1 + rng.bounded(9), dim);
        const auto b = random_segment(rng, 1 + rng.bounded(9), dim);
        const double alpha = rep % 2 ? 1.0 : 0.5 + rng.uniform();
        CHECK(std::abs(energy_stat(a, b, alpha) - oracle::naive_energy_stat(a, b, alpha)) < 1e-10);
    }
}

TEST_CASE("energy_stat rejects empty segments") {
    CHECK_THROWS_AS(energy_stat({}, {{1.0}}, 1.0), Error);
}

TEST_CASE("constant sequences yield no change points across seeds") {
    Matrix sequence(20, 2, 0.75);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        EDivParams params;
        params.seed = seed;
        const ChangePointSet cps = e_divisive_points(sequence, params);
        CHECK(cps.locations.empty());
    }
}

TEST_CASE("a clean flip from (1,0) to (0,1) is found at location 11") {
    Matrix sequence(20, 2, 0.0);
    for (int i = 0; i < 10; ++i) sequence(i, 0) = 1.0;
    for (int i = 10; i < 20; ++i) sequence(i, 1) = 1.0;
    EDivParams params;  // R = 199, alpha = 1
    const ChangePointSet cps = e_divisive_points(sequence, params);
    REQUIRE(cps.locations.size() == 1);
    CHECK(cps.locations[0] == 11);
    CHECK(cps.p_values[0] < 0.05);
    CHECK(cps.locations[0] == oracle::argmax_split_location(sequence, params.min_size, 1.0));
}

TEST_CASE("detected locations respect min_size") {
    Rng rng(21);
    Matrix sequence(24, 1);
    for (int i = 0; i < 24; ++i) sequence(i, 0) = rng.gaussian() + (i < 3 ? 40.0 : 0.0);
    EDivParams params;
    params.min_size = 5;
    const ChangePointSet cps = e_divisive_points(sequence, params);
    int previous = 1;
    for (int tau : cps.locations) {
        CHECK(tau - previous >= 5);
        previous = tau;
    }
    CHECK(24 - (previous - 1) >= 5);
}

TEST_CASE("translation invariance of locations and statistics") {
    Rng rng(23);
    Matrix sequence(18, 2);
    for (int i = 0; i < 18; ++i)
        for (int c = 0; c < 2; ++c)
            sequence(i, c) = static_cast<double>(rng.bounded(7)) + (i < 9 ? 0.0 : 25.0);
    Matrix shifted = sequence;
    for (int i = 0; i < 18; ++i) {
        shifted(i, 0) += 13.0;
        shifted(i, 1) -= 6.0;
    }
    EDivParams params;
    const ChangePointSet a = e_divisive_points(sequence, params);
    const ChangePointSet b = e_divisive_points(shifted, params);
    CHECK(a.locations == b.locations);
    CHECK(a.test_stats == b.test_stats);
}

TEST_CASE("deterministic given the seed") {
    Rng rng(29);
    Matrix sequence(30, 2);
    for (int i = 0; i < 30; ++i)
        for (int c = 0; c < 2; ++c) sequence(i, c) = rng.gaussian() + (i < 15 ? 0.0 : 3.0);
    EDivParams params;
    params.seed = 77;
    const ChangePointSet a = e_divisive_points(sequence, params);
    const ChangePointSet b = e_divisive_points(sequence, params);
    CHECK(a.locations == b.locations);
    CHECK(a.p_values == b.p_values);
    CHECK(a.test_stats == b.test_stats);
}

TEST_CASE("planted large shifts are located exactly at the argmax oracle") {
    Rng rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 20 + static_cast<int>(rng.bounded(15));
        const int cut = 4 + static_cast<int>(rng.bounded(n - 8));
        Matrix sequence(n, 2);
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < 2; ++c)
                sequence(i, c) = rng.gaussian() + (i < cut ? 0.0 : 8.0);  // 8 sd shift
        EDivParams params;
        params.seed = 1000 + rep;
        params.max_changepoints = 1;
        const ChangePointSet cps = e_divisive_points(sequence, params);
        REQUIRE(cps.locations.size() == 1);
        CHECK(cps.locations[0] == oracle::argmax_split_location(sequence, params.min_size, 1.0));
    }
}

TEST_CASE("max_changepoints zero disables the search") {
    Matrix sequence(20, 1);
    for (int i = 0; i < 20; ++i) sequence(i, 0) = i < 10 ? 0.0 : 50.0;
    EDivParams params;
    params.max_changepoints = 0;
    CHECK(e_divisive_points(sequence, params).locations.empty());
}

TEST_CASE("parameter validation") {
    EDivParams params;
    params.sig_level = 1.0;
    CHECK_THROWS_AS(params.validate(), Error);
    params = {};
    params.min_size = 1;
    CHECK_THROWS_AS(params.validate(), Error);
    params = {};
    params.alpha = 2.5;
    CHECK_THROWS_AS(params.validate(), Error);
    params = {};
    params.n_perm = 0;
    CHECK_THROWS_AS(params.validate(), Error);
}

TEST_CASE("membership matrix columns feed the detector in order") {
    MembershipMatrix m;
    m.values = Matrix(2, 20);
    for (int i = 0; i < 20; ++i) {
        m.values(0, i) = i < 10 ? 1.0 : 0.0;
        m.values(1, i) = i < 10 ? 0.0 : 1.0;
    }
    EDivParams params;
    const ChangePointSet cps = e_divisive(m, params);
    REQUIRE(cps.locations.size() == 1);
    CHECK(cps.locations[0] == 11);
}

}  // TEST_SUITE
