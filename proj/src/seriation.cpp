#include "czekan/seriation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "czekan/parallel.hpp"
#include "czekan/rng.hpp"

namespace czekan {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

bool Permutation::is_valid() const {
    if (order.empty()) return false;
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i)) return false;
    return true;
}

Permutation Permutation::reversed() const {
    Permutation p = *this;
    std::reverse(p.order.begin(), p.order.end());
    return p;
}

Dendrogram hierarchical_cluster(const DistanceMatrix& w, Linkage linkage) {
    const std::size_t n = w.size();
    if (n < 2) throw Error("hierarchical_cluster needs at least 2 observations");

    // Active-slot agglomeration. A merged cluster lives in the lower slot, so
    // a slot id is the lowest original index of its members and the ascending
    // pair scan implements the lowest-index tie rule.
    Matrix d(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double v = w(i, j);
            d(i, j) = linkage == Linkage::ward ? v * v : v;
        }

    std::vector<bool> active(n, true);
    std::vector<int> size(n, 1);
    std::vector<int> node(n);
    std::iota(node.begin(), node.end(), 0);

    Dendrogram tree;
    tree.n_leaves = static_cast<int>(n);
    tree.merges.reserve(n - 1);

    for (std::size_t merge = 0; merge + 1 < n; ++merge) {
        double best = kInf;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!active[j]) continue;
                if (d(i, j) < best) {
                    best = d(i, j);
                    bi = i;
                    bj = j;
                }
            }
        }

        const double si = size[bi], sj = size[bj];
        for (std::size_t k = 0; k < n; ++k) {
            if (!active[k] || k == bi || k == bj) continue;
            const double dik = d(bi, k), djk = d(bj, k);
            double updated;
            if (linkage == Linkage::average) {
                updated = (si * dik + sj * djk) / (si + sj);
            } else {
                const double sk = size[k];
                updated = ((si + sk) * dik + (sj + sk) * djk - sk * d(bi, bj)) / (si + sj + sk);
            }
            d(bi, k) = updated;
            d(k, bi) = updated;
        }

        // Children stored ascending by node id: singletons before merged
        // clusters, merged clusters by age (the layout convention shared by
        // the common statistical packages, which hc_order exposes directly).
        tree.merges.push_back({std::min(node[bi], node[bj]), std::max(node[bi], node[bj]), best,
                               size[bi] + size[bj]});
        node[bi] = tree.n_leaves + static_cast<int>(merge);
        size[bi] += size[bj];
        active[bj] = false;
    }
    return tree;
}

namespace {

// Leaves of every node (leaf ids < n, internal ids n + merge index),
// left-to-right in dendrogram layout.
std::vector<std::vector<int>> collect_leaves(const Dendrogram& tree) {
    const int n = tree.n_leaves;
    std::vector<std::vector<int>> leaves(n + tree.merges.size());
    for (int i = 0; i < n; ++i) leaves[i] = {i};
    for (std::size_t m = 0; m < tree.merges.size(); ++m) {
        const auto& node = tree.merges[m];
        auto& out = leaves[n + m];
        out = leaves[node.left];
        out.insert(out.end(), leaves[node.right].begin(), leaves[node.right].end());
    }
    return leaves;
}

}  // namespace

Permutation hc_order(const Dendrogram& tree) {
    if (tree.n_leaves == 1) return {{0}};
    if (tree.merges.empty()) throw Error("empty dendrogram");
    auto leaves = collect_leaves(tree);
    return {std::move(leaves.back())};
}

Permutation gw_order(const DistanceMatrix& w, const Dendrogram& tree) {
    const int n = tree.n_leaves;
    if (static_cast<std::size_t>(n) != w.size()) throw Error("tree and distance matrix sizes differ");
    if (n == 1) return {{0}};

    std::vector<std::vector<int>> order(n + tree.merges.size());
    for (int i = 0; i < n; ++i) order[i] = {i};

    for (std::size_t m = 0; m < tree.merges.size(); ++m) {
        const auto& node = tree.merges[m];
        std::vector<int>& a = order[node.left];
        std::vector<int>& b = order[node.right];

        // Four orientations; the junction is (last of left, first of right).
        const int ends_a[2] = {a.back(), a.front()};   // keep, flip
        const int ends_b[2] = {b.front(), b.back()};
        int best_variant = -1;
        double best_dist = kInf;
        std::pair<int, int> best_key{0, 0};
        for (int variant = 0; variant < 4; ++variant) {
            const int u = ends_a[variant & 1];
            const int v = ends_b[(variant >> 1) & 1];
            const double dist = w(u, v);
            const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
            if (dist < best_dist || (dist == best_dist && key < best_key)) {
                best_dist = dist;
                best_key = key;
                best_variant = variant;
            }
        }

        if (best_variant & 1) std::reverse(a.begin(), a.end());
        if (best_variant & 2) std::reverse(b.begin(), b.end());
        auto& merged = order[n + m];
        merged = std::move(a);
        merged.insert(merged.end(), b.begin(), b.end());
        b.clear();
        b.shrink_to_fit();
    }
    return {std::move(order.back())};
}

namespace {

// Optimal leaf ordering (dynamic program over subtree end-leaf pairs).
//
// cost[a][b] is the cheapest Hamiltonian path over the leaves of
// LCA(a, b) starting at a and ending at b, reachable by flipping internal
// nodes. For a node v with children l and r and endpoints a in l, b in r:
//
//   cost(v,a,b) = min_{w,z} cost(l,a,w) + W[w][z] + cost(r,z,b)
//
// where w runs over feasible far ends of l given a, z over feasible near
// ends of r given b. The inner minimum is split through
// h(z) = min_w cost(l,a,w) + W[w][z], giving the usual cubic total.
class OloSolver {
public:
    OloSolver(const DistanceMatrix& w, const Dendrogram& tree)
        : w_(w), tree_(tree), n_(tree.n_leaves),
          cost_(static_cast<std::size_t>(n_) * n_, kInf),
          arg_w_(static_cast<std::size_t>(n_) * n_, -1),
          arg_z_(static_cast<std::size_t>(n_) * n_, -1) {
        leaves_ = collect_leaves(tree_);
        for (auto& l : leaves_) std::sort(l.begin(), l.end());
        for (int a = 0; a < n_; ++a) cost_[idx(a, a)] = 0.0;
    }

    Permutation solve() {
        for (std::size_t m = 0; m < tree_.merges.size(); ++m) combine(tree_.merges[m]);

        const auto& root = tree_.merges.back();
        double best = kInf;
        int best_a = -1, best_b = -1;
        for (int a : leaves_[root.left]) {
            for (int b : leaves_[root.right]) {
                const double c = cost_[idx(a, b)];
                if (c < best) {
                    best = c;
                    best_a = a;
                    best_b = b;
                }
            }
        }

        Permutation result;
        result.order.reserve(n_);
        emit(static_cast<int>(tree_.merges.size()) - 1 + n_, best_a, best_b, result.order);
        return result;
    }

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }

    bool contains(int node, int leaf) const {
        const auto& l = leaves_[node];
        return std::binary_search(l.begin(), l.end(), leaf);
    }

    // Feasible far ends of `node` when one end is pinned at `pinned`: the
    // leaves of the sibling half (or the leaf itself for leaf nodes).
    const std::vector<int>& far_ends(int node, int pinned) const {
        if (node < n_) return leaves_[node];  // single leaf, {pinned}
        const auto& merge = tree_.merges[node - n_];
        return contains(merge.left, pinned) ? leaves_[merge.right] : leaves_[merge.left];
    }

    void combine(const DendrogramNode& node) {
        const auto& left_leaves = leaves_[node.left];
        const auto& right_leaves = leaves_[node.right];
        std::vector<double> h(right_leaves.size());
        std::vector<int> h_arg(right_leaves.size());
        std::vector<int> right_pos(n_, -1);
        for (std::size_t zi = 0; zi < right_leaves.size(); ++zi) right_pos[right_leaves[zi]] = static_cast<int>(zi);

        for (int a : left_leaves) {
            const auto& ws = far_ends(node.left, a);
            for (std::size_t zi = 0; zi < right_leaves.size(); ++zi) {
                const int z = right_leaves[zi];
                double best = kInf;
                int best_w = -1;
                for (int w : ws) {
                    const double c = cost_[idx(a, w)] + w_(w, z);
                    if (c < best) {
                        best = c;
                        best_w = w;
                    }
                }
                h[zi] = best;
                h_arg[zi] = best_w;
            }

            for (int b : right_leaves) {
                const auto& zs = far_ends(node.right, b);
                double best = kInf;
                int best_w = -1, best_z = -1;
                for (int z : zs) {
                    const double c = h[right_pos[z]] + cost_[idx(z, b)];
                    if (c < best) {
                        best = c;
                        best_w = h_arg[right_pos[z]];
                        best_z = z;
                    }
                }
                cost_[idx(a, b)] = best;
                cost_[idx(b, a)] = best;
                arg_w_[idx(a, b)] = best_w;
                arg_z_[idx(a, b)] = best_z;
            }
        }
    }

    // Append the a..b path of `node` to out. Argmins were stored with the
    // start leaf in the left child; the mirrored case emits reversed.
    void emit(int node, int a, int b, std::vector<int>& out) const {
        if (node < n_) {
            out.push_back(a);
            return;
        }
        const auto& merge = tree_.merges[node - n_];
        if (contains(merge.left, a)) {
            const int w = arg_w_[idx(a, b)];
            const int z = arg_z_[idx(a, b)];
            emit(merge.left, a, w, out);
            emit(merge.right, z, b, out);
        } else {
            std::vector<int> rev;
            rev.reserve(leaves_[node].size());
            emit(node, b, a, rev);
            out.insert(out.end(), rev.rbegin(), rev.rend());
        }
    }

    const DistanceMatrix& w_;
    const Dendrogram& tree_;
    const int n_;
    std::vector<std::vector<int>> leaves_;  // sorted per node
    std::vector<double> cost_;
    std::vector<int> arg_w_;
    std::vector<int> arg_z_;
};

}  // namespace

Permutation olo_order(const DistanceMatrix& w, const Dendrogram& tree) {
    if (static_cast<std::size_t>(tree.n_leaves) != w.size())
        throw Error("tree and distance matrix sizes differ");
    if (tree.n_leaves == 1) return {{0}};
    if (tree.merges.empty()) throw Error("empty dendrogram");
    return OloSolver(w, tree).solve();
}

namespace {

// Band energy sum_{i,j} W[order[i]][order[j]] * kern[|i-j|], kernel truncated
// at its radius.
double band_energy(const DistanceMatrix& w, const std::vector<int>& order,
                   const std::vector<double>& kern) {
    const std::size_t n = order.size();
    const std::size_t radius = kern.size() - 1;
    double energy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t jmax = std::min(n - 1, i + radius);
        for (std::size_t j = i + 1; j <= jmax; ++j)
            energy += w(order[i], order[j]) * kern[j - i];
    }
    return 2.0 * energy;
}

}  // namespace

namespace {

// One annealing stage: re-sort objects by the position of their smallest band
// mismatch, keeping only re-sorts that lower the band energy. The mismatch of
// object o against position t is evaluated with o removed from the layout,
// the argmin is refined to a fractional target by parabolic interpolation,
// and target ties keep the current relative order.
double spin_stage(const DistanceMatrix& w, std::vector<int>& order,
                  const std::vector<double>& kern, double sigma, int max_iter,
                  std::vector<SpinStep>& trace) {
    const std::size_t n = order.size();
    const std::size_t radius = kern.size() - 1;
    double energy = band_energy(w, order, kern);
    trace.push_back({sigma, energy});

    std::vector<std::pair<double, long long>> keyed(n);
    std::vector<std::size_t> ranked(n);
    std::vector<int> candidate(n);
    for (int iter = 0; iter < max_iter; ++iter) {
        // keyed[p] only depends on the frozen `order`, so objects can be
        // scored in parallel without affecting the result.
        parallel_for(n, [&](std::size_t begin, std::size_t end) {
            std::vector<double> cost(n);
            for (std::size_t p = begin; p < end; ++p) {
                const int obj = order[p];
                for (std::size_t t = 0; t < n; ++t) {
                    const std::size_t lo = t > radius ? t - radius : 0;
                    const std::size_t hi = std::min(n - 1, t + radius);
                    double acc = 0.0;
                    for (std::size_t j = lo; j <= hi; ++j)
                        if (j != p) acc += w(obj, order[j]) * kern[j > t ? j - t : t - j];
                    cost[t] = acc;
                }
                std::size_t best_t = 0;
                for (std::size_t t = 1; t < n; ++t)
                    if (cost[t] < cost[best_t]) best_t = t;
                double target = static_cast<double>(best_t);
                if (best_t > 0 && best_t + 1 < n) {
                    const double curvature =
                        cost[best_t - 1] - 2.0 * cost[best_t] + cost[best_t + 1];
                    if (curvature > 1e-12)
                        target += 0.5 * (cost[best_t - 1] - cost[best_t + 1]) / curvature;
                }
                keyed[p] = {target, static_cast<long long>(p)};
            }
        });
        std::iota(ranked.begin(), ranked.end(), 0);
        std::sort(ranked.begin(), ranked.end(),
                  [&](std::size_t a, std::size_t b) { return keyed[a] < keyed[b]; });
        for (std::size_t p = 0; p < n; ++p) candidate[p] = order[ranked[p]];

        const double new_energy = band_energy(w, candidate, kern);
        if (new_energy < energy) {
            order = candidate;
            energy = new_energy;
            trace.push_back({sigma, energy});
        } else {
            break;
        }
    }
    return energy;
}

}  // namespace

SpinResult spin_nh_order_traced(const DistanceMatrix& w, std::uint64_t seed, int max_iter) {
    const std::size_t n = w.size();
    SpinResult result;
    if (n < 2) {
        result.permutation.order.assign(n, 0);
        return result;
    }

    std::vector<int>& order = result.permutation.order;
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(derive_seed(seed, 0x5350494eULL));  // "SPIN"
    rng.shuffle(order);

    for (double sigma : {n / 2.0, n / 4.0, n / 8.0, n / 16.0, 1.0}) {
        sigma = std::max(sigma, 1.0);
        if (result.sigmas.empty() || result.sigmas.back() != sigma) result.sigmas.push_back(sigma);
    }

    // Gaussian bands, truncated where they fall below ~1e-16 of the peak.
    std::vector<std::vector<double>> kernels;
    for (double sigma : result.sigmas) {
        const std::size_t radius =
            std::min(n - 1, static_cast<std::size_t>(std::ceil(6.0 * sigma)));
        std::vector<double> kern(radius + 1);
        for (std::size_t d = 0; d <= radius; ++d)
            kern[d] = std::exp(-static_cast<double>(d) * d / (2.0 * sigma * sigma));
        kernels.push_back(std::move(kern));
    }

    // Sweep the whole band schedule repeatedly: once the layout is roughly
    // ordered, a second pass of the wide bands can still undo global
    // misplacements that a single cooling pass locks in. Stop when the
    // narrowest band no longer improves.
    constexpr int kMaxSweeps = 5;
    double final_energy = kInf;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double last = kInf;
        for (std::size_t s = 0; s < result.sigmas.size(); ++s)
            last = spin_stage(w, order, kernels[s], result.sigmas[s], max_iter, result.trace);
        if (last >= final_energy) break;
        final_energy = last;
    }
    return result;
}

Permutation spin_nh_order(const DistanceMatrix& w, std::uint64_t seed, int max_iter) {
    return spin_nh_order_traced(w, seed, max_iter).permutation;
}

SeriationMethod seriation_method_from_string(const std::string& name) {
    if (name == "OLO_average") return SeriationMethod::olo_average;
    if (name == "OLO_ward") return SeriationMethod::olo_ward;
    if (name == "HC_ward") return SeriationMethod::hc_ward;
    if (name == "GW_ward") return SeriationMethod::gw_ward;
    if (name == "SPIN_NH") return SeriationMethod::spin_nh;
    throw Error("unknown seriation method: " + name +
                " (expected OLO_average|OLO_ward|HC_ward|GW_ward|SPIN_NH)");
}

std::string to_string(SeriationMethod method) {
    switch (method) {
        case SeriationMethod::olo_average: return "OLO_average";
        case SeriationMethod::olo_ward: return "OLO_ward";
        case SeriationMethod::hc_ward: return "HC_ward";
        case SeriationMethod::gw_ward: return "GW_ward";
        case SeriationMethod::spin_nh: return "SPIN_NH";
    }
    throw Error("unknown seriation method");
}

Permutation seriate(const DistanceMatrix& w, SeriationMethod method, std::uint64_t seed,
                    int spin_max_iter) {
    if (w.size() == 1) return {{0}};
    switch (method) {
        case SeriationMethod::olo_average:
            return olo_order(w, hierarchical_cluster(w, Linkage::average));
        case SeriationMethod::olo_ward:
            return olo_order(w, hierarchical_cluster(w, Linkage::ward));
        case SeriationMethod::hc_ward:
            return hc_order(hierarchical_cluster(w, Linkage::ward));
        case SeriationMethod::gw_ward:
            return gw_order(w, hierarchical_cluster(w, Linkage::ward));
        case SeriationMethod::spin_nh:
            return spin_nh_order(w, seed, spin_max_iter);
    }
    throw Error("unknown seriation method");
}

}  // namespace czekan
