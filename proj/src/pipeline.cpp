#include "czekan/pipeline.hpp"

#include "czekan/metrics.hpp"
#include "czekan/rng.hpp"

namespace czekan {

void RunConfig::reseed(std::uint64_t s) {
    seed = s;
    fcm.seed = derive_seed(s, 1);
    ediv.seed = derive_seed(s, 2);
}

PipelineResult czekanowski_cluster(const Dataset& ds, const RunConfig& cfg) {
    if (cfg.fcm.k < 1) throw Error("cluster count must be >= 1");

    PipelineResult result;

    const Dataset* data = &ds;
    Dataset scaled;
    if (cfg.scaling) {
        auto [scaled_ds, spec] = zscore(ds);
        scaled = std::move(scaled_ds);
        result.scaling = std::move(spec);
        data = &scaled;
    }

    result.distances = distance_matrix(*data, Metric::euclidean);
    result.permutation = seriate(result.distances, cfg.method, cfg.seed, cfg.spin_max_iter);
    result.czek = cfg.mode == CzekMode::symmetric
                      ? czek_symmetric(result.distances, result.permutation, cfg.n_classes, cfg.probs)
                      : czek_asymmetric(result.distances, result.permutation, cfg.n_classes,
                                        cfg.column_group_fractions);

    const std::size_t n = ds.n();
    ClusterResult& clusters = result.clusters;
    clusters.k_requested = cfg.fcm.k;

    if (cfg.fcm.k == 1) {
        // Nothing to split; one interval covers everything.
        clusters.intervals.push_back({1, static_cast<int>(n)});
        clusters.k_found = 1;
        clusters.labels.assign(n, 1);
    } else {
        result.membership = fcm(result.czek, cfg.fcm);

        EDivParams ediv = cfg.ediv;
        if (!ediv.max_changepoints) ediv.max_changepoints = cfg.fcm.k - 1;
        result.changepoints = e_divisive(result.membership, ediv);

        // Accepted locations carve the seriated order into contiguous
        // intervals, labelled 1..k_found left to right.
        int start = 1;
        for (int tau : result.changepoints.locations) {
            clusters.intervals.push_back({start, tau - 1});
            start = tau;
        }
        clusters.intervals.push_back({start, static_cast<int>(n)});
        clusters.k_found = static_cast<int>(clusters.intervals.size());

        clusters.labels.resize(n);
        for (std::size_t idx = 0; idx < clusters.intervals.size(); ++idx) {
            const auto& interval = clusters.intervals[idx];
            for (int pos = interval.start; pos <= interval.end; ++pos)
                clusters.labels[pos - 1] = static_cast<int>(idx) + 1;
        }
    }

    clusters.labels_original_order.resize(n);
    for (std::size_t pos = 0; pos < n; ++pos)
        clusters.labels_original_order[result.permutation.order[pos]] = clusters.labels[pos];

    result.u_m = u_m_factor(result.distances, result.permutation);
    result.path_len = path_length(result.distances, result.permutation);
    return result;
}

}  // namespace czekan
