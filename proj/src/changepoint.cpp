#include "czekan/changepoint.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "czekan/parallel.hpp"
#include "czekan/rng.hpp"

namespace czekan {

void EDivParams::validate() const {
    if (sig_level <= 0.0 || sig_level >= 1.0) throw Error("sig_level must lie in (0,1)");
    if (n_perm < 1) throw Error("n_perm must be >= 1");
    if (min_size < 2) throw Error("min_size must be >= 2");
    if (alpha <= 0.0 || alpha > 2.0) throw Error("alpha must lie in (0,2]");
    if (max_changepoints && *max_changepoints < 0) throw Error("max_changepoints must be >= 0");
}

namespace {

double alpha_distance(std::span<const double> a, std::span<const double> b, double alpha) {
    double ssq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        ssq += d * d;
    }
    const double norm = std::sqrt(ssq);
    return alpha == 1.0 ? norm : std::pow(norm, alpha);
}

double q_statistic(double ab, double aa, double bb, std::size_t n, std::size_t m) {
    const double dn = static_cast<double>(n), dm = static_cast<double>(m);
    double e = 2.0 * ab / (dn * dm);
    if (n > 1) e -= aa / (dn * (dn - 1.0) / 2.0);
    if (m > 1) e -= bb / (dm * (dm - 1.0) / 2.0);
    return dn * dm / (dn + dm) * e;
}

struct Split {
    double stat = -std::numeric_limits<double>::infinity();
    std::size_t segment = 0;  // index into the segment list
    std::size_t tau = 0;      // 0-based position where the right part starts
    bool found = false;
};

// Best (segment, split) over the sequence view idx, where idx[p] is the row
// of the precomputed distance matrix sitting at position p. The split scan is
// incremental: moving the boundary one step right shifts one element from the
// right part to the left part in O(segment length).
Split best_split(const Matrix& dist, const std::vector<int>& idx,
                 const std::vector<std::pair<std::size_t, std::size_t>>& segments,
                 std::size_t min_size) {
    Split best;
    for (std::size_t s_idx = 0; s_idx < segments.size(); ++s_idx) {
        const auto [s, e] = segments[s_idx];
        if (e - s < 2 * min_size) continue;

        const std::size_t tau0 = s + min_size;
        double aa = 0.0, bb = 0.0, ab = 0.0;
        for (std::size_t p = s; p < e; ++p)
            for (std::size_t q = p + 1; q < e; ++q) {
                const double d = dist(idx[p], idx[q]);
                if (q < tau0)
                    aa += d;
                else if (p >= tau0)
                    bb += d;
                else
                    ab += d;
            }

        for (std::size_t tau = tau0; tau + min_size <= e; ++tau) {
            const double q = q_statistic(ab, aa, bb, tau - s, e - tau);
            if (q > best.stat) {
                best.stat = q;
                best.segment = s_idx;
                best.tau = tau;
                best.found = true;
            }
            if (tau + min_size == e) break;
            // Shift idx[tau] from the right part into the left part.
            const int moved = idx[tau];
            double to_left = 0.0, to_right = 0.0;
            for (std::size_t p = s; p < tau; ++p) to_left += dist(idx[p], moved);
            for (std::size_t q = tau + 1; q < e; ++q) to_right += dist(moved, idx[q]);
            aa += to_left;
            bb -= to_right;
            ab += to_right - to_left;
        }
    }
    return best;
}

}  // namespace

double energy_stat(const std::vector<std::vector<double>>& segment_a,
                   const std::vector<std::vector<double>>& segment_b, double alpha) {
    if (segment_a.empty() || segment_b.empty()) throw Error("energy_stat needs non-empty segments");
    const std::size_t n = segment_a.size(), m = segment_b.size();

    double ab = 0.0, aa = 0.0, bb = 0.0;
    for (const auto& a : segment_a)
        for (const auto& b : segment_b) ab += alpha_distance(a, b, alpha);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) aa += alpha_distance(segment_a[i], segment_a[j], alpha);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) bb += alpha_distance(segment_b[i], segment_b[j], alpha);

    return q_statistic(ab, aa, bb, n, m);
}

ChangePointSet e_divisive_points(const Matrix& sequence, const EDivParams& params) {
    params.validate();
    const std::size_t n = sequence.rows();
    ChangePointSet result;
    if (n < 2 * static_cast<std::size_t>(params.min_size)) return result;

    Matrix dist(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = alpha_distance(sequence.row(i), sequence.row(j), params.alpha);
            dist(i, j) = d;
            dist(j, i) = d;
        }

    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> segments{{0, n}};
    const std::size_t min_size = static_cast<std::size_t>(params.min_size);

    for (std::size_t iteration = 0;; ++iteration) {
        if (params.max_changepoints &&
            static_cast<int>(result.locations.size()) >= *params.max_changepoints)
            break;

        const Split observed = best_split(dist, identity, segments, min_size);
        if (!observed.found) break;

        // Permutation test: shuffle within every current segment, re-run the
        // full split search. Each replicate owns a seed substream, so the
        // outcome does not depend on scheduling.
        std::vector<char> exceeds(params.n_perm, 0);
        parallel_for(static_cast<std::size_t>(params.n_perm), [&](std::size_t begin, std::size_t end) {
            std::vector<int> shuffled(n);
            for (std::size_t r = begin; r < end; ++r) {
                Rng rng(derive_seed(params.seed, iteration, r));
                shuffled = identity;
                for (const auto& [s, e] : segments) {
                    // Fisher-Yates on the slice [s, e).
                    for (std::size_t i = e - s; i > 1; --i) {
                        const std::size_t j = static_cast<std::size_t>(rng.bounded(i));
                        std::swap(shuffled[s + i - 1], shuffled[s + j]);
                    }
                }
                const Split permuted = best_split(dist, shuffled, segments, min_size);
                if (permuted.found && permuted.stat >= observed.stat) exceeds[r] = 1;
            }
        });

        const int count = static_cast<int>(std::count(exceeds.begin(), exceeds.end(), 1));
        const double p_value = static_cast<double>(count) / static_cast<double>(params.n_perm + 1);
        if (p_value >= params.sig_level) break;

        result.locations.push_back(static_cast<int>(observed.tau) + 1);  // 1-based
        result.p_values.push_back(p_value);
        result.test_stats.push_back(observed.stat);

        const auto [s, e] = segments[observed.segment];
        segments[observed.segment] = {s, observed.tau};
        segments.insert(segments.begin() + static_cast<std::ptrdiff_t>(observed.segment) + 1,
                        {observed.tau, e});
    }

    // Align the three lists sorted by location.
    std::vector<std::size_t> by_location(result.locations.size());
    std::iota(by_location.begin(), by_location.end(), 0);
    std::sort(by_location.begin(), by_location.end(),
              [&](std::size_t a, std::size_t b) { return result.locations[a] < result.locations[b]; });
    ChangePointSet sorted;
    for (std::size_t i : by_location) {
        sorted.locations.push_back(result.locations[i]);
        sorted.p_values.push_back(result.p_values[i]);
        sorted.test_stats.push_back(result.test_stats[i]);
    }
    return sorted;
}

ChangePointSet e_divisive(const MembershipMatrix& m, const EDivParams& params) {
    Matrix sequence(m.n(), m.k());
    for (std::size_t i = 0; i < m.n(); ++i)
        for (std::size_t j = 0; j < m.k(); ++j) sequence(i, j) = m.values(j, i);
    return e_divisive_points(sequence, params);
}

}  // namespace czekan
