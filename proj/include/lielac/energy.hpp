#pragma once

#include "lielac/fields.hpp"

#include <functional>
#include <span>
#include <vector>

namespace lielac {

/// 1D problem instance: initial condition plus the window of evaluation
/// points the caller will query.
struct ProblemInstance {
    Field1D ic;
    QueryWindow query;
    GroupId group = GroupId::heat;
};

/// 2D (Allen-Cahn) instance; queries cover the full unit square spatially.
/// domain_rot accumulates the rotation applied to the underlying square so
/// the characteristic constraint x0 = Omega stays checkable after resampling
/// (torus translations preserve the domain; only quarter turns do among
/// rotations).
struct ProblemInstance2D {
    Field2D ic;
    double tf_lo = 0.0;
    double tf_hi = 1.0;
    double domain_rot = 0.0;
};

/// Forward action of an SE(2)+time element on a 2D instance.
ProblemInstance2D transform_instance_ace(const Se2TimeElement& g, const ProblemInstance2D& inst);

enum class EnergyKind { kde_nll, heat_domain, burgers_domain, ace_constrained, custom };

/// Parameters of the heat training-domain energy.
struct HeatEnergyParams {
    JetBounds domain{-1.0, 1.0, 0.0, 6.283185307179586476925286766559, 0.0, 0.0};
    double tf_cap = 16.0;
    /// false: dist[t_f, [0, tf_cap]] (default); true: dist[t_f, {tf_cap}].
    bool tf_point = false;
};

struct BurgersEnergyParams {
    double domain_length = 1.0;
    double xf_lo = 0.0, xf_hi = 1.0;
    double tf_lo = 0.0, tf_hi = 1.0;
    /// false: dist[t_0, {0}] (default); true: dist[t_0, [tf_lo, tf_hi]].
    bool t0_interval = false;
};

/// Serializable energy selection for run configs.
struct EnergyConfig {
    EnergyKind kind = EnergyKind::heat_domain;
    double bandwidth = 0.2;              // kde_nll
    HeatEnergyParams heat;
    BurgersEnergyParams burgers;
    double constraint_tol = 1e-9;        // ace_constrained
    double alpha_reg = 0.0;              // weight of an optional plug-in regularizer
};

/// Finite stand-in for the +infinity of characteristic-function constraints.
inline constexpr double kConstraintSentinel = 1e9;

/// Distance from v to the interval [lo, hi]; zero inside, 1-Lipschitz.
double dist_interval(double v, double lo, double hi);

/// Negative log-likelihood of a Gaussian KDE, via log-sum-exp:
///   -log( (1/N) sum_i (2 pi h^2)^{-d/2} exp(-|point - s_i|^2 / (2 h^2)) )
double kde_nll(std::span<const std::vector<double>> samples, double h,
               std::span<const double> point);

/// Convenience overload for 2D points.
double kde_nll_2d(std::span<const std::array<double, 2>> samples, double h,
                  double px, double py);

/// Heat energy: interval distances of the jet extrema to the training box
/// plus query-window distances; zero iff the instance lies inside the box.
double e_heat(const ProblemInstance& inst, const HeatEnergyParams& p = {});
double e_heat(const ProblemInstance& inst, const JetBounds& domain);

/// Burgers energy: |domain length - 1| + dist[t0] + |mean u0| + window terms.
double e_burgers(const ProblemInstance& inst, const BurgersEnergyParams& p = {});

/// Allen-Cahn constrained energy: sentinel when any characteristic
/// constraint (standard domain, t0 = 0, queries inside [0,1]) is violated
/// beyond tol, otherwise inner(u0).
double e_ace(const ProblemInstance2D& inst,
             const std::function<double(const Field2D&)>& inner, double tol = 1e-9);

/// Default inner energy for ACE experiments: mean square of u0 on the x=0
/// and y=0 node lines (zero exactly for the training-distribution ICs).
double ace_boundary_energy(const Field2D& f);

} // namespace lielac
