#include "lielac/toy2d.hpp"

#include "lielac/energy.hpp"
#include "lielac/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lielac {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

LabeledPoints2D sample_ring_mixture(int n_per_ring, std::span<const double> radii,
                                    double noise_std, std::uint64_t seed, int lobes) {
    if (n_per_ring < 1 || lobes < 1) {
        throw std::invalid_argument("sample_ring_mixture: counts must be positive");
    }
    for (double r : radii) {
        if (!(r > 0.0)) throw std::invalid_argument("sample_ring_mixture: radii must be positive");
    }
    Rng rng(seed);
    LabeledPoints2D out;
    out.points.reserve(radii.size() * static_cast<std::size_t>(n_per_ring));
    out.labels.reserve(out.points.capacity());
    for (std::size_t ring = 0; ring < radii.size(); ++ring) {
        const double offset = static_cast<double>(ring) * kTwoPi / (2.0 * lobes);
        for (int i = 0; i < n_per_ring; ++i) {
            const auto lobe = rng.uniform_int(0, lobes - 1);
            const double theta = offset + kTwoPi * static_cast<double>(lobe) / lobes;
            const double cx = radii[ring] * std::cos(theta);
            const double cy = radii[ring] * std::sin(theta);
            out.points.push_back({cx + noise_std * rng.gaussian(),
                                  cy + noise_std * rng.gaussian()});
            out.labels.push_back(static_cast<int>(ring));
        }
    }
    return out;
}

int knn_classify(const LabeledPoints2D& train, int k, const std::array<double, 2>& query) {
    const int n = static_cast<int>(train.points.size());
    if (k < 1 || k > n) throw std::invalid_argument("knn_classify: k out of range");
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    const auto d2 = [&](int i) {
        const double dx = train.points[i][0] - query[0];
        const double dy = train.points[i][1] - query[1];
        return dx * dx + dy * dy;
    };
    std::partial_sort(idx.begin(), idx.begin() + k, idx.end(), [&](int a, int b) {
        const double da = d2(a), db = d2(b);
        return da < db || (da == db && a < b);
    });
    int max_label = 0;
    for (int lbl : train.labels) max_label = std::max(max_label, lbl);
    std::vector<int> votes(static_cast<std::size_t>(max_label) + 1, 0);
    for (int i = 0; i < k; ++i) ++votes[train.labels[idx[i]]];
    int best = 0;
    for (std::size_t lbl = 1; lbl < votes.size(); ++lbl) {
        if (votes[lbl] > votes[best]) best = static_cast<int>(lbl);
    }
    return best;
}

CanonResult<So2Ops> so2_canonicalize(const LabeledPoints2D& train, double h,
                                     const std::array<double, 2>& point,
                                     const OptimConfig& cfg) {
    if (!(h > 0.0)) throw std::invalid_argument("so2_canonicalize: bandwidth must be positive");
    So2Ops ops;
    const auto energy = [&](const std::array<double, 2>& p) {
        return kde_nll_2d(train.points, h, p[0], p[1]);
    };
    return multi_init_canonicalize(Algorithm::global_retraction, ops, energy, point, cfg);
}

} // namespace lielac
