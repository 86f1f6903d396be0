#include "czekan/czek_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace czekan {

std::vector<double> default_probs(int n_classes) {
    std::vector<double> probs;
    probs.reserve(n_classes - 1);
    for (int i = 1; i < n_classes; ++i)
        probs.push_back(static_cast<double>(i) / static_cast<double>(n_classes));
    return probs;
}

double quantile_type7(const std::vector<double>& sorted_values, double p) {
    if (sorted_values.empty()) throw Error("quantile of empty sample");
    const std::size_t n = sorted_values.size();
    if (n == 1) return sorted_values[0];
    const double h = (static_cast<double>(n) - 1.0) * p;
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= n) return sorted_values[n - 1];
    const double frac = h - static_cast<double>(lo);
    return sorted_values[lo] + frac * (sorted_values[lo + 1] - sorted_values[lo]);
}

namespace {

void check_permutation(const DistanceMatrix& w, const Permutation& pi) {
    if (pi.size() != w.size() || !pi.is_valid())
        throw Error("permutation does not match distance matrix");
}

void note_unused_classes(CzekMatrix& result) {
    std::set<int> used(result.classes.data().begin(), result.classes.data().end());
    if (static_cast<int>(used.size()) < result.n_classes) {
        std::string missing;
        for (int c = 1; c <= result.n_classes; ++c)
            if (!used.count(c)) missing += (missing.empty() ? "" : ", ") + std::to_string(c);
        result.warnings.push_back("degenerate breaks: class(es) " + missing +
                                  " are empty and were merged into their neighbors");
    }
}

}  // namespace

CzekMatrix czek_symmetric(const DistanceMatrix& w, const Permutation& pi, int n_classes,
                          const std::vector<double>& probs_in) {
    check_permutation(w, pi);
    if (n_classes < 2) throw Error("czek_symmetric needs n_classes >= 2");
    const std::vector<double> probs = probs_in.empty() ? default_probs(n_classes) : probs_in;
    if (static_cast<int>(probs.size()) != n_classes - 1)
        throw Error("expected " + std::to_string(n_classes - 1) + " quantile levels, got " +
                    std::to_string(probs.size()));
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] <= 0.0 || probs[i] >= 1.0) throw Error("quantile levels must lie in (0,1)");
        if (i > 0 && probs[i] <= probs[i - 1]) throw Error("quantile levels must be strictly increasing");
    }

    const std::size_t n = w.size();

    // Breaks come from the off-diagonal upper triangle only; zero
    // self-distances would drag the quantiles down.
    std::vector<double> pool;
    pool.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pool.push_back(w(i, j));
    std::sort(pool.begin(), pool.end());

    CzekMatrix result;
    result.permutation = pi;
    result.n_classes = n_classes;
    result.mode = CzekMode::symmetric;
    for (double p : probs) result.breaks.push_back(pool.empty() ? 0.0 : quantile_type7(pool, p));

    result.classes = IntMatrix(n, n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double dist = w(pi.order[i], pi.order[j]);
            int cls = 1;
            for (double b : result.breaks)
                if (b < dist) ++cls;
            result.classes(i, j) = cls;
        }
    }

    note_unused_classes(result);
    return result;
}

CzekMatrix czek_asymmetric(const DistanceMatrix& w, const Permutation& pi, int n_classes,
                           const std::vector<double>& fractions_in) {
    check_permutation(w, pi);
    if (n_classes < 1) throw Error("czek_asymmetric needs n_classes >= 1");
    std::vector<double> fractions = fractions_in;
    if (fractions.empty())
        fractions.assign(n_classes, 1.0 / static_cast<double>(n_classes));
    if (static_cast<int>(fractions.size()) != n_classes)
        throw Error("expected " + std::to_string(n_classes) + " column group fractions");
    double total = 0.0;
    for (double f : fractions) {
        if (f < 0.0) throw Error("column group fractions must be nonnegative");
        total += f;
    }
    if (std::abs(total - 1.0) > 1e-9) throw Error("column group fractions must sum to 1");

    const std::size_t n = w.size();
    CzekMatrix result;
    result.permutation = pi;
    result.n_classes = n_classes;
    result.mode = CzekMode::asymmetric;
    result.classes = IntMatrix(n, n, n_classes);
    result.column_breaks.resize(n);

    std::vector<int> ranked(n);
    for (std::size_t col = 0; col < n; ++col) {
        const int focal = pi.order[col];
        std::iota(ranked.begin(), ranked.end(), 0);
        std::sort(ranked.begin(), ranked.end(), [&](int a, int b) {
            const double da = w(pi.order[a], focal);
            const double db = w(pi.order[b], focal);
            if (da != db) return da < db;
            return pi.order[a] < pi.order[b];
        });

        std::size_t next = 0;
        for (int cls = 1; cls <= n_classes; ++cls) {
            std::size_t count = static_cast<std::size_t>(
                std::ceil(fractions[cls - 1] * static_cast<double>(n)));
            if (cls == n_classes) count = n - next;  // remainder absorbs rounding
            count = std::min(count, n - next);
            for (std::size_t k = 0; k < count; ++k) result.classes(ranked[next + k], col) = cls;
            next += count;
            if (cls < n_classes)
                result.column_breaks[col].push_back(
                    next > 0 ? w(pi.order[ranked[next - 1]], focal) : 0.0);
        }
    }

    note_unused_classes(result);
    return result;
}

}  // namespace czekan
