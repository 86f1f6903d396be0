#include <doctest.h>

#include <set>

#include "czekan/pipeline.hpp"
#include "test_util.hpp"

using namespace czekan;

namespace {

Dataset blob_dataset(Rng& rng, int per_blob, double separation) {
    Dataset ds;
    ds.observations = Matrix(2 * per_blob, 2);
    for (int i = 0; i < 2 * per_blob; ++i) {
        const double center = i < per_blob ? 0.0 : separation;
        ds.observations(i, 0) = center + rng.gaussian();
        ds.observations(i, 1) = rng.gaussian();
        ds.row_ids.push_back("r" + std::to_string(i));
    }
    ds.feature_names = {"x", "y"};
    return ds;
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("two far blobs split exactly at the blob boundary") {
    Rng rng(61);
    const int per_blob = 10;
    const Dataset ds = blob_dataset(rng, per_blob, 40.0);
    RunConfig cfg;
    cfg.method = SeriationMethod::olo_average;
    cfg.reseed(5);
    const PipelineResult result = czekanowski_cluster(ds, cfg);

    REQUIRE(result.clusters.k_found == 2);
    // Interval membership must equal blob membership.
    std::set<int> first_cluster;
    for (int i = 0; i < 2 * per_blob; ++i)
        if (result.clusters.labels_original_order[i] == 1) first_cluster.insert(i);
    std::set<int> blob_a, blob_b;
    for (int i = 0; i < per_blob; ++i) blob_a.insert(i);
    for (int i = per_blob; i < 2 * per_blob; ++i) blob_b.insert(i);
    CHECK((first_cluster == blob_a || first_cluster == blob_b));
}

TEST_CASE("k = 1 skips the change-point search") {
    Rng rng(67);
    const Dataset ds = blob_dataset(rng, 6, 5.0);
    RunConfig cfg;
    cfg.fcm.k = 1;
    cfg.reseed(2);
    const PipelineResult result = czekanowski_cluster(ds, cfg);
    REQUIRE(result.clusters.intervals.size() == 1);
    CHECK(result.clusters.intervals[0].start == 1);
    CHECK(result.clusters.intervals[0].end == 12);
    CHECK(result.changepoints.locations.empty());
    CHECK(result.clusters.k_found == 1);
}

TEST_CASE("labels in original order are the seriated labels pulled back") {
    Rng rng(71);
    const Dataset ds = blob_dataset(rng, 8, 12.0);
    RunConfig cfg;
    cfg.reseed(9);
    const PipelineResult result = czekanowski_cluster(ds, cfg);
    for (std::size_t pos = 0; pos < ds.n(); ++pos)
        CHECK(result.clusters.labels_original_order[result.permutation.order[pos]] ==
              result.clusters.labels[pos]);
}

TEST_CASE("clusters are contiguous runs and partition the order") {
    Rng rng(73);
    const Dataset ds = blob_dataset(rng, 9, 8.0);
    RunConfig cfg;
    cfg.fcm.k = 3;
    cfg.reseed(4);
    const PipelineResult result = czekanowski_cluster(ds, cfg);

    CHECK(result.clusters.k_found <= result.clusters.k_requested);
    int expected_start = 1;
    for (std::size_t i = 0; i < result.clusters.intervals.size(); ++i) {
        const auto& interval = result.clusters.intervals[i];
        CHECK(interval.start == expected_start);
        CHECK(interval.end >= interval.start);
        expected_start = interval.end + 1;
        for (int pos = interval.start; pos <= interval.end; ++pos)
            CHECK(result.clusters.labels[pos - 1] == static_cast<int>(i) + 1);
    }
    CHECK(expected_start == static_cast<int>(ds.n()) + 1);

    // Labels never interleave: they are non-decreasing along the order.
    for (std::size_t pos = 1; pos < ds.n(); ++pos)
        CHECK(result.clusters.labels[pos] >= result.clusters.labels[pos - 1]);
}

TEST_CASE("identical seeds reproduce every artifact") {
    Rng rng(79);
    const Dataset ds = blob_dataset(rng, 7, 6.0);
    RunConfig cfg;
    cfg.method = SeriationMethod::spin_nh;
    cfg.reseed(123);
    const PipelineResult a = czekanowski_cluster(ds, cfg);
    const PipelineResult b = czekanowski_cluster(ds, cfg);
    CHECK(a.permutation.order == b.permutation.order);
    CHECK(a.czek.classes == b.czek.classes);
    CHECK(a.membership.values == b.membership.values);
    CHECK(a.changepoints.locations == b.changepoints.locations);
    CHECK(a.changepoints.p_values == b.changepoints.p_values);
    CHECK(a.clusters.labels == b.clusters.labels);
    CHECK(a.u_m == b.u_m);
    CHECK(a.path_len == b.path_len);
}

TEST_CASE("indistinguishable data yields a single cluster") {
    // All observations identical: no change point can be significant.
    Dataset ds;
    ds.observations = Matrix(12, 2, 3.0);
    for (int i = 0; i < 12; ++i) ds.row_ids.push_back("r" + std::to_string(i));
    ds.feature_names = {"x", "y"};
    RunConfig cfg;
    cfg.scaling = false;  // constant features cannot be z-scored
    cfg.fcm.k = 2;
    cfg.reseed(31);
    const PipelineResult result = czekanowski_cluster(ds, cfg);
    CHECK(result.clusters.k_found == 1);
    CHECK(result.clusters.k_requested == 2);
}

}  // TEST_SUITE
