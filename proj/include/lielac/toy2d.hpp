#pragma once

#include "lielac/optim.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace lielac {

struct LabeledPoints2D {
    std::vector<std::array<double, 2>> points;
    std::vector<int> labels;
};

/// Ring mixture: per ring, Gaussian lobes at `lobes` equispaced angles
/// (consecutive rings offset by half a lobe spacing so the lobe angles
/// differ between rings). Label = ring index.
LabeledPoints2D sample_ring_mixture(int n_per_ring, std::span<const double> radii,
                                    double noise_std, std::uint64_t seed, int lobes = 3);

/// Majority label among the k Euclidean-nearest training points; ties break
/// toward the smaller label.
int knn_classify(const LabeledPoints2D& train, int k, const std::array<double, 2>& query);

/// Rotates `point` about the origin to a minimizer of the Gaussian-KDE
/// negative log-likelihood of the training samples, by multi-initialized
/// gradient descent on the rotation angle.
CanonResult<So2Ops> so2_canonicalize(const LabeledPoints2D& train, double h,
                                     const std::array<double, 2>& point,
                                     const OptimConfig& cfg);

} // namespace lielac
