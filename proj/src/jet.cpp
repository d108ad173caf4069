#include "lielac/jet.hpp"

#include "lielac/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace lielac {

namespace {

double checked_denom(double gamma, double delta, double t) {
    const double den = gamma * t + delta;
    if (std::abs(den) < kSingularTol) {
        throw SingularTransform("point transformation singular at requested time");
    }
    return den;
}

} // namespace

JetPoint heat_act_point(const HeatGroupElement& g, double nu, const JetPoint& p) {
    if (!(nu > 0.0)) throw std::invalid_argument("heat_act_point: nu must be positive");
    const double den = checked_denom(g.a.gamma, g.a.delta, p.t);
    const double num_x = p.x + g.h.lambda1 * p.t + g.h.lambda0;
    const double t_new = (g.a.alpha * p.t + g.a.beta) / den;
    const double x_new = num_x / den;
    const double expo = g.a.gamma * num_x * num_x / (4.0 * nu * den) -
                        g.h.lambda1 * p.x / (2.0 * nu) -
                        g.h.lambda1 * g.h.lambda1 * p.t / (4.0 * nu);
    const double u_new =
        std::exp(g.h.ln_sigma / nu) * std::sqrt(std::abs(den)) * std::exp(expo) * p.u;
    return {t_new, x_new, u_new};
}

JetPoint heat_flow(int index, FlowParam eps, double nu, const JetPoint& p) {
    const double e = eps.eps;
    switch (index) {
    case 1: return {p.t, p.x + e, p.u};
    case 2: return {p.t + e, p.x, p.u};
    case 3: return {p.t, p.x, std::exp(e / nu) * p.u};
    case 4: return {std::exp(2.0 * e) * p.t, std::exp(e) * p.x, std::exp(-0.5 * e) * p.u};
    case 5:
        return {p.t, p.x + e * p.t,
                std::exp(-(e * e * p.t + 2.0 * e * p.x) / (4.0 * nu)) * p.u};
    case 6: {
        const double den = checked_denom(-e, 1.0, p.t); // 1 - eps*t
        return {p.t / den, p.x / den,
                std::sqrt(std::abs(den)) * std::exp(e * p.x * p.x / (4.0 * nu * (e * p.t - 1.0))) * p.u};
    }
    default: throw std::invalid_argument("heat_flow: index out of range");
    }
}

JetPoint burgers_act_point(const BurgersGroupElement& g, const JetPoint& p) {
    const double den = checked_denom(g.a.gamma, g.a.delta, p.t);
    const double num_x = p.x + g.lambda1 * p.t + g.lambda0;
    const double t_new = (g.a.alpha * p.t + g.a.beta) / den;
    const double x_new = num_x / den;
    const double u_new = den * p.u - g.a.gamma * p.x + g.lambda1 * g.a.delta - g.lambda0 * g.a.gamma;
    return {t_new, x_new, u_new};
}

JetPoint burgers_flow(int index, FlowParam eps, const JetPoint& p) {
    const double e = eps.eps;
    switch (index) {
    case 1: return {p.t, p.x + e, p.u};
    case 2: return {p.t + e, p.x, p.u};
    case 3: return {std::exp(2.0 * e) * p.t, std::exp(e) * p.x, std::exp(-e) * p.u};
    case 4: return {p.t, p.x + e * p.t, p.u + e};
    case 5: {
        const double den = checked_denom(-e, 1.0, p.t);
        return {p.t / den, p.x / den, p.u * den + e * p.x};
    }
    default: throw std::invalid_argument("burgers_flow: index out of range");
    }
}

JetPoint2D ace_act_point(const Se2Element& g, double t_shift, const JetPoint2D& p) {
    const double c = std::cos(g.theta), s = std::sin(g.theta);
    return {p.t + t_shift, c * p.x - s * p.y + g.tx, s * p.x + c * p.y + g.ty, p.u};
}

std::array<double, 3> generator_vector(GeneratorId v, double nu, const JetPoint& p) {
    if (v.group == GroupId::heat) {
        switch (v.index) {
        case 1: return {0.0, 1.0, 0.0};
        case 2: return {1.0, 0.0, 0.0};
        case 3: return {0.0, 0.0, p.u / nu};
        case 4: return {2.0 * p.t, p.x, -0.5 * p.u};
        case 5: return {0.0, p.t, -p.x * p.u / (2.0 * nu)};
        case 6: return {p.t * p.t, p.t * p.x, -(p.x * p.x + 2.0 * nu * p.t) * p.u / (4.0 * nu)};
        default: break;
        }
    } else if (v.group == GroupId::burgers) {
        switch (v.index) {
        case 1: return {0.0, 1.0, 0.0};
        case 2: return {1.0, 0.0, 0.0};
        case 3: return {2.0 * p.t, p.x, -p.u};
        case 4: return {0.0, p.t, 1.0};
        case 5: return {p.t * p.t, p.t * p.x, p.x - p.t * p.u};
        default: break;
        }
    }
    throw std::invalid_argument("generator_vector: unsupported generator");
}

std::array<double, 3> bracket_commutator_estimate(GeneratorId vi, GeneratorId vj,
                                                  double eps, double nu, const JetPoint& p) {
    if (vi.group != vj.group) {
        throw std::invalid_argument("bracket_commutator_estimate: mixed groups");
    }
    auto flow = [&](int idx, double e, const JetPoint& q) {
        return vi.group == GroupId::heat ? heat_flow(idx, {e}, nu, q)
                                         : burgers_flow(idx, {e}, q);
    };
    JetPoint q = flow(vi.index, eps, p);
    q = flow(vj.index, eps, q);
    q = flow(vi.index, -eps, q);
    q = flow(vj.index, -eps, q);
    return {q.t - p.t, q.x - p.x, q.u - p.u};
}

std::vector<double> bracket_table(GroupId group, int i, int j) {
    if (i > j) {
        auto c = bracket_table(group, j, i);
        for (double& v : c) v = -v;
        return c;
    }
    if (group == GroupId::heat) {
        std::vector<double> c(6, 0.0);
        // [v4,v2]=-2v2, [v4,v6]=2v6, [v2,v6]=v4, [v2,v5]=v1,
        // [v4,v5]=v5, [v4,v1]=-v1, [v6,v1]=-v5, [v5,v1]=v3/2
        if (i == 2 && j == 4) c[1] = 2.0;
        else if (i == 4 && j == 6) c[5] = 2.0;
        else if (i == 2 && j == 6) c[3] = 1.0;
        else if (i == 2 && j == 5) c[0] = 1.0;
        else if (i == 4 && j == 5) c[4] = 1.0;
        else if (i == 1 && j == 4) c[0] = 1.0;
        else if (i == 1 && j == 6) c[4] = 1.0;
        else if (i == 1 && j == 5) c[2] = -0.5;
        return c;
    }
    if (group == GroupId::burgers) {
        std::vector<double> c(5, 0.0);
        // [v3,v2]=-2v2, [v3,v5]=2v5, [v2,v5]=v3, [v2,v4]=v1,
        // [v3,v4]=v4, [v3,v1]=-v1, [v5,v1]=-v4
        if (i == 2 && j == 3) c[1] = 2.0;
        else if (i == 3 && j == 5) c[4] = 2.0;
        else if (i == 2 && j == 5) c[2] = 1.0;
        else if (i == 2 && j == 4) c[0] = 1.0;
        else if (i == 3 && j == 4) c[3] = 1.0;
        else if (i == 1 && j == 3) c[0] = 1.0;
        else if (i == 1 && j == 5) c[3] = 1.0;
        return c;
    }
    throw std::invalid_argument("bracket_table: unsupported group");
}

} // namespace lielac
