#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "czekan/distance.hpp"

namespace czekan {

/// Seriation order: order[p] is the original row index placed at position p.
struct Permutation {
    std::vector<int> order;

    std::size_t size() const { return order.size(); }
    bool is_valid() const;
    Permutation reversed() const;
};

/// One agglomeration step. Children < n_leaves are leaves, otherwise they
/// refer to merge (child - n_leaves).
struct DendrogramNode {
    int left = -1;
    int right = -1;
    double height = 0.0;
    int size = 0;
};

struct Dendrogram {
    int n_leaves = 0;
    std::vector<DendrogramNode> merges;  // n_leaves - 1 entries, bottom-up
};

enum class Linkage { average, ward };

/// Agglomerative clustering via the Lance-Williams recurrences. Ward runs on
/// squared distances and reports merge heights on that scale. Nearest-pair
/// ties go to the pair with the lowest original indices.
Dendrogram hierarchical_cluster(const DistanceMatrix& w, Linkage linkage);

/// Left-to-right leaf order of the dendrogram as built, no reorientation.
Permutation hc_order(const Dendrogram& tree);

/// Gruvaeus-Wainer orientation: at every merge, flip subtrees so that the two
/// leaves meeting at the junction are the closest endpoint pair.
Permutation gw_order(const DistanceMatrix& w, const Dendrogram& tree);

/// Optimal leaf ordering: among all 2^(N-1) orders reachable by flipping
/// internal nodes, returns one minimizing the sum of consecutive-leaf
/// distances (dynamic program over subtree end-leaf pairs).
Permutation olo_order(const DistanceMatrix& w, const Dendrogram& tree);

/// One accepted SPIN step: band width and the energy after the step.
struct SpinStep {
    double sigma = 0.0;
    double energy = 0.0;
};

struct SpinResult {
    Permutation permutation;
    std::vector<SpinStep> trace;  // initial energy and each accepted improvement, per sigma
    std::vector<double> sigmas;
};

/// Neighborhood SPIN: starting from a random order, repeatedly place each
/// object at the position minimizing its mismatch against a Gaussian band
/// weight matrix, accepting re-sorts that lower the band energy
/// sum_{ij} W[pi(i)][pi(j)] * exp(-(i-j)^2 / (2 sigma^2)). The band width is
/// annealed over sigma in {N/2, N/4, N/8, N/16, 1} with up to max_iter
/// accepted steps per stage.
SpinResult spin_nh_order_traced(const DistanceMatrix& w, std::uint64_t seed, int max_iter = 10);
Permutation spin_nh_order(const DistanceMatrix& w, std::uint64_t seed, int max_iter = 10);

enum class SeriationMethod { olo_average, olo_ward, hc_ward, gw_ward, spin_nh };

SeriationMethod seriation_method_from_string(const std::string& name);
std::string to_string(SeriationMethod method);

/// Dispatch on method name; seed and max_iter only matter for SPIN_NH.
Permutation seriate(const DistanceMatrix& w, SeriationMethod method, std::uint64_t seed = 1,
                    int spin_max_iter = 10);

}  // namespace czekan
