#pragma once

#include "lielac/groups.hpp"

#include <array>
#include <vector>

namespace lielac {

/// Point (t, x, u) of the zeroth-order jet space for the 1D PDE groups.
struct JetPoint {
    double t = 0.0;
    double x = 0.0;
    double u = 0.0;
};

/// Point (t, x, y, u) for the 2D Allen-Cahn setting.
struct JetPoint2D {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double u = 0.0;
};

/// Basis generator v_index of a group's Lie algebra, index in 1..dim.
struct GeneratorId {
    GroupId group = GroupId::heat;
    int index = 1;
};

struct FlowParam {
    double eps = 0.0;
};

// ---------------------------------------------------------------------------
// Closed-form point actions
// ---------------------------------------------------------------------------

/// Heat-group action on a jet:
///   t~ = (alpha t + beta) / (gamma t + delta)
///   x~ = (x + lambda1 t + lambda0) / (gamma t + delta)
///   u~ = e^{ln_sigma/nu} sqrt|gamma t + delta|
///        * exp(gamma (x+lambda1 t+lambda0)^2 / (4 nu (gamma t+delta))
///               - lambda1 x/(2 nu) - lambda1^2 t/(4 nu)) * u
/// Throws SingularTransform when |gamma t + delta| < kSingularTol.
JetPoint heat_act_point(const HeatGroupElement& g, double nu, const JetPoint& p);

/// One-parameter flow exp(eps * v_index) from the heat flow table.
/// v6 is singular where |1 - eps t| < kSingularTol.
JetPoint heat_flow(int index, FlowParam eps, double nu, const JetPoint& p);

/// Burgers-group action: same base map, u~ = (gamma t+delta) u - gamma x
/// + lambda1 delta - lambda0 gamma.
JetPoint burgers_act_point(const BurgersGroupElement& g, const JetPoint& p);

JetPoint burgers_flow(int index, FlowParam eps, const JetPoint& p);

/// SE(2)+time action: rigid motion on (x,y), shift on t, u unchanged.
JetPoint2D ace_act_point(const Se2Element& g, double t_shift, const JetPoint2D& p);

// ---------------------------------------------------------------------------
// Generator vector fields and numerical brackets
// ---------------------------------------------------------------------------

/// Value (dt, dx, du) of the generator vector field at p.
std::array<double, 3> generator_vector(GeneratorId v, double nu, const JetPoint& p);

/// Commutator-of-flows displacement
///   Delta(p) = Phi_j^{-eps} Phi_i^{-eps} Phi_j^{eps} Phi_i^{eps}(p) - p,
/// with Phi_i^{eps} applied to p first. Delta/eps^2 -> s*[v_i, v_j]|_p.
std::array<double, 3> bracket_commutator_estimate(GeneratorId vi, GeneratorId vj,
                                                  double eps, double nu, const JetPoint& p);

/// Structure constants: [v_i, v_j] = sum_k coeff[k-1] * v_k for i < j,
/// from the tabulated nonzero brackets. Zero vector for commuting pairs.
std::vector<double> bracket_table(GroupId group, int i, int j);

} // namespace lielac
