#include "lielac/groups.hpp"

#include "lielac/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace lielac {

int algebra_dim(GroupId id) {
    switch (id) {
    case GroupId::heat: return 6;
    case GroupId::burgers: return 5;
    case GroupId::se2: return 4;
    case GroupId::so2: return 1;
    }
    throw std::invalid_argument("algebra_dim: unknown group");
}

// ---------------------------------------------------------------------------
// SL(2,R)
// ---------------------------------------------------------------------------

Sl2Matrix::Sl2Matrix(double a, double b, double c, double d)
    : alpha(a), beta(b), gamma(c), delta(d) {
    const double det = alpha * delta - beta * gamma;
    if (!(det > 0.0)) {
        throw std::invalid_argument("Sl2Matrix: determinant must be positive");
    }
    const double s = 1.0 / std::sqrt(det);
    alpha *= s;
    beta *= s;
    gamma *= s;
    delta *= s;
}

Sl2Matrix sl2_mul(const Sl2Matrix& a, const Sl2Matrix& b) {
    return Sl2Matrix(a.alpha * b.alpha + a.beta * b.gamma,
                     a.alpha * b.beta + a.beta * b.delta,
                     a.gamma * b.alpha + a.delta * b.gamma,
                     a.gamma * b.beta + a.delta * b.delta);
}

Sl2Matrix sl2_inverse(const Sl2Matrix& a) {
    return Sl2Matrix(a.delta, -a.beta, -a.gamma, a.alpha);
}

bool sl2_approx_equal(const Sl2Matrix& a, const Sl2Matrix& b, double tol) {
    return std::abs(a.alpha - b.alpha) <= tol && std::abs(a.beta - b.beta) <= tol &&
           std::abs(a.gamma - b.gamma) <= tol && std::abs(a.delta - b.delta) <= tol;
}

// ---------------------------------------------------------------------------
// Heat group
// ---------------------------------------------------------------------------

HeisenbergPol heisenberg_mul(const HeisenbergPol& a, const HeisenbergPol& b) {
    // Matrix product of the upper-triangular embeddings.
    return {a.lambda1 + b.lambda1, a.lambda0 + b.lambda0,
            a.ln_sigma + b.ln_sigma - 0.5 * a.lambda1 * b.lambda0};
}

HeisenbergPol heisenberg_inverse(const HeisenbergPol& h) {
    return {-h.lambda1, -h.lambda0, -h.ln_sigma - 0.5 * h.lambda1 * h.lambda0};
}

HeisenbergPol heat_phi(const Sl2Matrix& a, const HeisenbergPol& h) {
    const double l1 = a.alpha * h.lambda1 + a.gamma * h.lambda0;
    const double l0 = a.beta * h.lambda1 + a.delta * h.lambda0;
    const double s = h.ln_sigma + 0.25 * h.lambda0 * h.lambda1 - 0.25 * l1 * l0;
    return {l1, l0, s};
}

HeatGroupElement heat_compose(const HeatGroupElement& g1, const HeatGroupElement& g2) {
    return {sl2_mul(g1.a, g2.a), heisenberg_mul(heat_phi(g2.a, g1.h), g2.h)};
}

HeatGroupElement heat_inverse(const HeatGroupElement& g) {
    const Sl2Matrix ainv = sl2_inverse(g.a);
    return {ainv, heat_phi(ainv, heisenberg_inverse(g.h))};
}

double heat_param_distance(const HeatGroupElement& a, const HeatGroupElement& b) {
    double d = 0.0;
    d = std::max(d, std::abs(a.a.alpha - b.a.alpha));
    d = std::max(d, std::abs(a.a.beta - b.a.beta));
    d = std::max(d, std::abs(a.a.gamma - b.a.gamma));
    d = std::max(d, std::abs(a.a.delta - b.a.delta));
    d = std::max(d, std::abs(a.h.lambda1 - b.h.lambda1));
    d = std::max(d, std::abs(a.h.lambda0 - b.h.lambda0));
    d = std::max(d, std::abs(a.h.ln_sigma - b.h.ln_sigma));
    return d;
}

// ---------------------------------------------------------------------------
// Burgers group
// ---------------------------------------------------------------------------

std::array<double, 2> burgers_phi(const Sl2Matrix& a, double lambda1, double lambda0) {
    return {lambda1 * a.alpha + lambda0 * a.gamma, lambda1 * a.beta + lambda0 * a.delta};
}

BurgersGroupElement burgers_compose(const BurgersGroupElement& g1, const BurgersGroupElement& g2) {
    const auto tw = burgers_phi(g2.a, g1.lambda1, g1.lambda0);
    return {sl2_mul(g1.a, g2.a), tw[0] + g2.lambda1, tw[1] + g2.lambda0};
}

BurgersGroupElement burgers_inverse(const BurgersGroupElement& g) {
    const Sl2Matrix ainv = sl2_inverse(g.a);
    const auto tw = burgers_phi(ainv, -g.lambda1, -g.lambda0);
    return {ainv, tw[0], tw[1]};
}

double burgers_param_distance(const BurgersGroupElement& a, const BurgersGroupElement& b) {
    double d = 0.0;
    d = std::max(d, std::abs(a.a.alpha - b.a.alpha));
    d = std::max(d, std::abs(a.a.beta - b.a.beta));
    d = std::max(d, std::abs(a.a.gamma - b.a.gamma));
    d = std::max(d, std::abs(a.a.delta - b.a.delta));
    d = std::max(d, std::abs(a.lambda1 - b.lambda1));
    d = std::max(d, std::abs(a.lambda0 - b.lambda0));
    return d;
}

// ---------------------------------------------------------------------------
// SE(2) / SO(2)
// ---------------------------------------------------------------------------

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}
} // namespace

Se2Element se2_compose(const Se2Element& g1, const Se2Element& g2) {
    const double c = std::cos(g1.theta), s = std::sin(g1.theta);
    return {wrap_angle(g1.theta + g2.theta),
            g1.tx + c * g2.tx - s * g2.ty,
            g1.ty + s * g2.tx + c * g2.ty};
}

Se2Element se2_inverse(const Se2Element& g) {
    const double c = std::cos(g.theta), s = std::sin(g.theta);
    // R(-theta) * (-t)
    return {wrap_angle(-g.theta), -(c * g.tx + s * g.ty), -(-s * g.tx + c * g.ty)};
}

So2Element so2_compose(const So2Element& g1, const So2Element& g2) {
    return {wrap_angle(g1.theta + g2.theta)};
}

So2Element so2_inverse(const So2Element& g) {
    return {wrap_angle(-g.theta)};
}

// ---------------------------------------------------------------------------
// Coefficients and exponential trains
// ---------------------------------------------------------------------------

LieAlgebraCoeffs::LieAlgebraCoeffs(GroupId g, std::vector<double> c)
    : group(g), coeffs(std::move(c)) {
    if (static_cast<int>(coeffs.size()) != algebra_dim(g)) {
        throw std::invalid_argument("LieAlgebraCoeffs: length does not match algebra dimension");
    }
}

LieAlgebraCoeffs LieAlgebraCoeffs::zero(GroupId g) {
    return LieAlgebraCoeffs(g, std::vector<double>(algebra_dim(g), 0.0));
}

HeatGroupElement heat_exp_gen(int index, double eps) {
    HeatGroupElement g;
    switch (index) {
    case 1: g.h.lambda0 = eps; break;
    case 2: g.a = Sl2Matrix(1.0, eps, 0.0, 1.0); break;
    case 3: g.h.ln_sigma = eps; break;
    case 4: g.a = Sl2Matrix(std::exp(eps), 0.0, 0.0, std::exp(-eps)); break;
    case 5: g.h.lambda1 = eps; break;
    case 6: g.a = Sl2Matrix(1.0, 0.0, -eps, 1.0); break;
    default: throw std::invalid_argument("heat_exp_gen: index out of range");
    }
    return g;
}

BurgersGroupElement burgers_exp_gen(int index, double eps) {
    BurgersGroupElement g;
    switch (index) {
    case 1: g.lambda0 = eps; break;
    case 2: g.a = Sl2Matrix(1.0, eps, 0.0, 1.0); break;
    case 3: g.a = Sl2Matrix(std::exp(eps), 0.0, 0.0, std::exp(-eps)); break;
    case 4: g.lambda1 = eps; break;
    case 5: g.a = Sl2Matrix(1.0, 0.0, -eps, 1.0); break;
    default: throw std::invalid_argument("burgers_exp_gen: index out of range");
    }
    return g;
}

HeatGroupElement heat_exp_train(std::span<const double> coeffs) {
    if (coeffs.size() != 6) throw std::invalid_argument("heat_exp_train: expected 6 coefficients");
    HeatGroupElement g = heat_exp_gen(6, coeffs[5]);
    for (int k = 5; k >= 1; --k) {
        g = heat_compose(g, heat_exp_gen(k, coeffs[static_cast<std::size_t>(k) - 1]));
    }
    return g;
}

BurgersGroupElement burgers_exp_train(std::span<const double> coeffs) {
    if (coeffs.size() != 5) throw std::invalid_argument("burgers_exp_train: expected 5 coefficients");
    BurgersGroupElement g = burgers_exp_gen(5, coeffs[4]);
    for (int k = 4; k >= 1; --k) {
        g = burgers_compose(g, burgers_exp_gen(k, coeffs[static_cast<std::size_t>(k) - 1]));
    }
    return g;
}

Se2TimeElement se2_compose(const Se2TimeElement& g1, const Se2TimeElement& g2) {
    return {se2_compose(g1.rigid, g2.rigid), g1.t_shift + g2.t_shift};
}

Se2TimeElement se2_inverse(const Se2TimeElement& g) {
    return {se2_inverse(g.rigid), -g.t_shift};
}

Se2TimeElement se2_exp_train(std::span<const double> coeffs) {
    if (coeffs.size() != 4) throw std::invalid_argument("se2_exp_train: expected 4 coefficients");
    // exp(a4 v4) * exp(a3 v3) * exp(a2 v2) * exp(a1 v1); translations commute.
    Se2Element rot{coeffs[3], 0.0, 0.0};
    rot.theta = so2_compose({coeffs[3]}, {0.0}).theta;
    Se2Element trans{0.0, coeffs[1], coeffs[2]};
    return {se2_compose(rot, trans), coeffs[0]};
}

So2Element so2_exp_train(std::span<const double> coeffs) {
    if (coeffs.size() != 1) throw std::invalid_argument("so2_exp_train: expected 1 coefficient");
    return so2_compose({coeffs[0]}, So2Element::identity());
}

} // namespace lielac
