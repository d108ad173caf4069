#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace lielac {

enum class GroupId { heat, burgers, se2, so2 };

/// Algebra dimension of a group (heat 6, Burgers 5, SE(2)+time 4, SO(2) 1).
int algebra_dim(GroupId id);

// ---------------------------------------------------------------------------
// SL(2,R)
// ---------------------------------------------------------------------------

/// 2x2 real matrix with unit determinant. Entries are normalized to
/// det = 1 on construction and after every arithmetic operation.
struct Sl2Matrix {
    double alpha = 1.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 1.0;

    Sl2Matrix() = default;
    /// Normalizes by 1/sqrt(det); requires det > 0 (identity component).
    Sl2Matrix(double a, double b, double c, double d);

    double det() const { return alpha * delta - beta * gamma; }
};

Sl2Matrix sl2_mul(const Sl2Matrix& a, const Sl2Matrix& b);
Sl2Matrix sl2_inverse(const Sl2Matrix& a);
bool sl2_approx_equal(const Sl2Matrix& a, const Sl2Matrix& b, double tol);

// ---------------------------------------------------------------------------
// Heat symmetry group:  SL(2,R) semidirect H(1,R)
// ---------------------------------------------------------------------------

/// Element of the rank-one polarized Heisenberg group, embedded as
/// [[1, -lambda1/2, ln_sigma], [0, 1, lambda0], [0, 0, 1]].
///
/// ln_sigma is stored in diffusivity-normalized form: the induced action
/// multiplies u by exp(ln_sigma / nu). In this coordinate the product,
/// inverse and the twist map below are independent of nu.
struct HeisenbergPol {
    double lambda1 = 0.0;
    double lambda0 = 0.0;
    double ln_sigma = 0.0;
};

HeisenbergPol heisenberg_mul(const HeisenbergPol& a, const HeisenbergPol& b);
HeisenbergPol heisenberg_inverse(const HeisenbergPol& h);

/// The antihomomorphism SL(2,R) -> Aut(H(1,R)) twisting the semidirect
/// product: phi(A*B) = phi(B) o phi(A).
HeisenbergPol heat_phi(const Sl2Matrix& a, const HeisenbergPol& h);

struct HeatGroupElement {
    Sl2Matrix a;
    HeisenbergPol h;

    static HeatGroupElement identity() { return {}; }
};

/// Group product (left factor first): act(compose(g1,g2)) = act(g1) o act(g2).
HeatGroupElement heat_compose(const HeatGroupElement& g1, const HeatGroupElement& g2);
HeatGroupElement heat_inverse(const HeatGroupElement& g);

/// Max absolute difference over the seven coordinates.
double heat_param_distance(const HeatGroupElement& a, const HeatGroupElement& b);

// ---------------------------------------------------------------------------
// Burgers symmetry group:  SL(2,R) semidirect (R^2,+)
// ---------------------------------------------------------------------------

struct BurgersGroupElement {
    Sl2Matrix a;
    double lambda1 = 0.0;
    double lambda0 = 0.0;

    static BurgersGroupElement identity() { return {}; }
};

/// Twist map: row vector (lambda1, lambda0) times the SL(2) matrix.
std::array<double, 2> burgers_phi(const Sl2Matrix& a, double lambda1, double lambda0);

BurgersGroupElement burgers_compose(const BurgersGroupElement& g1, const BurgersGroupElement& g2);
BurgersGroupElement burgers_inverse(const BurgersGroupElement& g);
double burgers_param_distance(const BurgersGroupElement& a, const BurgersGroupElement& b);

// ---------------------------------------------------------------------------
// SE(2) (planar rigid motions) and SO(2)
// ---------------------------------------------------------------------------

/// Rigid motion p -> R(theta) p + (tx, ty); theta reduced to [0, 2*pi).
struct Se2Element {
    double theta = 0.0;
    double tx = 0.0;
    double ty = 0.0;

    static Se2Element identity() { return {}; }
};

Se2Element se2_compose(const Se2Element& g1, const Se2Element& g2);
Se2Element se2_inverse(const Se2Element& g);

struct So2Element {
    double theta = 0.0;

    static So2Element identity() { return {}; }
};

So2Element so2_compose(const So2Element& g1, const So2Element& g2);
So2Element so2_inverse(const So2Element& g);

// ---------------------------------------------------------------------------
// Lie algebra coefficients and exponential trains
// ---------------------------------------------------------------------------

/// Coefficient vector over the fixed generator basis v_1..v_dim of a group.
struct LieAlgebraCoeffs {
    GroupId group = GroupId::heat;
    std::vector<double> coeffs;

    LieAlgebraCoeffs() = default;
    LieAlgebraCoeffs(GroupId g, std::vector<double> c);

    static LieAlgebraCoeffs zero(GroupId g);
    int dim() const { return static_cast<int>(coeffs.size()); }
};

/// Single-generator exponential exp(eps * v_index), index in 1..dim.
HeatGroupElement heat_exp_gen(int index, double eps);
BurgersGroupElement burgers_exp_gen(int index, double eps);

/// Ordered product of single-generator exponentials
/// exp(a_n v_n) * ... * exp(a_1 v_1); the v_1 factor acts on jets first.
/// exp_train of the zero vector is the identity.
HeatGroupElement heat_exp_train(std::span<const double> coeffs);
BurgersGroupElement burgers_exp_train(std::span<const double> coeffs);

/// SE(2)+time train over (v1=time shift, v2=dx, v3=dy, v4=rotation);
/// the time shift is returned separately from the rigid motion.
struct Se2TimeElement {
    Se2Element rigid;
    double t_shift = 0.0;

    static Se2TimeElement identity() { return {}; }
};

Se2TimeElement se2_compose(const Se2TimeElement& g1, const Se2TimeElement& g2);
Se2TimeElement se2_inverse(const Se2TimeElement& g);
Se2TimeElement se2_exp_train(std::span<const double> coeffs);

So2Element so2_exp_train(std::span<const double> coeffs);

} // namespace lielac
