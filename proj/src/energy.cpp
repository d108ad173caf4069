#include "lielac/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lielac {

double dist_interval(double v, double lo, double hi) {
    if (lo > hi) throw std::invalid_argument("dist_interval: lo > hi");
    if (v < lo) return lo - v;
    if (v > hi) return v - hi;
    return 0.0;
}

double kde_nll(std::span<const std::vector<double>> samples, double h,
               std::span<const double> point) {
    if (samples.empty()) throw std::invalid_argument("kde_nll: need at least one sample");
    if (!(h > 0.0)) throw std::invalid_argument("kde_nll: bandwidth must be positive");
    const std::size_t d = point.size();
    const double inv2h2 = 1.0 / (2.0 * h * h);

    double max_e = -std::numeric_limits<double>::infinity();
    std::vector<double> exponents;
    exponents.reserve(samples.size());
    for (const auto& s : samples) {
        if (s.size() != d) throw std::invalid_argument("kde_nll: dimension mismatch");
        double r2 = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            const double diff = point[k] - s[k];
            r2 += diff * diff;
        }
        const double e = -r2 * inv2h2;
        exponents.push_back(e);
        max_e = std::max(max_e, e);
    }
    double acc = 0.0;
    for (double e : exponents) acc += std::exp(e - max_e);
    const double lse = max_e + std::log(acc);
    constexpr double kLogTwoPi = 1.8378770664093454835606594728112;
    const double log_norm = -0.5 * static_cast<double>(d) * (kLogTwoPi + 2.0 * std::log(h));
    return -(lse - std::log(static_cast<double>(samples.size())) + log_norm);
}

double kde_nll_2d(std::span<const std::array<double, 2>> samples, double h,
                  double px, double py) {
    if (samples.empty()) throw std::invalid_argument("kde_nll_2d: need at least one sample");
    if (!(h > 0.0)) throw std::invalid_argument("kde_nll_2d: bandwidth must be positive");
    const double inv2h2 = 1.0 / (2.0 * h * h);
    double max_e = -std::numeric_limits<double>::infinity();
    std::vector<double> exponents;
    exponents.reserve(samples.size());
    for (const auto& s : samples) {
        const double dx = px - s[0], dy = py - s[1];
        const double e = -(dx * dx + dy * dy) * inv2h2;
        exponents.push_back(e);
        max_e = std::max(max_e, e);
    }
    double acc = 0.0;
    for (double e : exponents) acc += std::exp(e - max_e);
    const double lse = max_e + std::log(acc);
    constexpr double kLogTwoPi = 1.8378770664093454835606594728112;
    return -(lse - std::log(static_cast<double>(samples.size())) - kLogTwoPi - 2.0 * std::log(h));
}

double e_heat(const ProblemInstance& inst, const HeatEnergyParams& p) {
    const JetBounds jet = jet_bounds(inst.ic);
    const JetBounds& box = p.domain;
    double e = 0.0;
    // dist[max(jet0), max(jet_Omega)] + dist[min(jet0), min(jet_Omega)]:
    // l1 distance between the extremum vectors, so the canonical jet box is
    // pinned to the training box (amplitudes below 1 are scaled up too).
    e += std::abs(jet.u_max - box.u_max);
    e += std::abs(jet.x_max - box.x_max);
    e += std::abs(jet.t_max - box.t_max);
    e += std::abs(jet.u_min - box.u_min);
    e += std::abs(jet.x_min - box.x_min);
    e += std::abs(jet.t_min - box.t_min);
    // dist[x_f, Omega]
    e += dist_interval(inst.query.xf_lo(), box.x_min, box.x_max);
    e += dist_interval(inst.query.xf_hi(), box.x_min, box.x_max);
    // dist[t_f, 16]
    const double tf_lo = p.tf_point ? p.tf_cap : 0.0;
    e += dist_interval(inst.query.tf_lo(), tf_lo, p.tf_cap);
    e += dist_interval(inst.query.tf_hi(), tf_lo, p.tf_cap);
    return e;
}

double e_heat(const ProblemInstance& inst, const JetBounds& domain) {
    HeatEnergyParams p;
    p.domain = domain;
    return e_heat(inst, p);
}

double e_burgers(const ProblemInstance& inst, const BurgersEnergyParams& p) {
    const JetBounds jet = jet_bounds(inst.ic);
    double e = std::abs((jet.x_max - jet.x_min) - p.domain_length);
    if (p.t0_interval) {
        e += dist_interval(inst.ic.time, p.tf_lo, p.tf_hi);
    } else {
        e += std::abs(inst.ic.time);
    }
    e += std::abs(inst.ic.mean());
    e += dist_interval(inst.query.xf_lo(), p.xf_lo, p.xf_hi);
    e += dist_interval(inst.query.xf_hi(), p.xf_lo, p.xf_hi);
    e += dist_interval(inst.query.tf_lo(), p.tf_lo, p.tf_hi);
    e += dist_interval(inst.query.tf_hi(), p.tf_lo, p.tf_hi);
    return e;
}

ProblemInstance2D transform_instance_ace(const Se2TimeElement& g, const ProblemInstance2D& inst) {
    ProblemInstance2D out;
    out.ic = transform_ic_ace(g.rigid, g.t_shift, inst.ic);
    out.tf_lo = inst.tf_lo + g.t_shift;
    out.tf_hi = inst.tf_hi + g.t_shift;
    out.domain_rot = inst.domain_rot + g.rigid.theta;
    return out;
}

double e_ace(const ProblemInstance2D& inst,
             const std::function<double(const Field2D&)>& inner, double tol) {
    // chi_Omega(x0): torus translations preserve the square; a rotation does
    // only when it is a quarter turn.
    constexpr double kHalfPi = 1.5707963267948966192313216916398;
    const double frac = std::remainder(inst.domain_rot, kHalfPi);
    if (std::abs(frac) > tol) return kConstraintSentinel;
    if (std::abs(inst.ic.time) > tol) return kConstraintSentinel;
    if (inst.tf_lo < -tol || inst.tf_hi > 1.0 + tol || inst.tf_lo > inst.tf_hi) {
        return kConstraintSentinel;
    }
    if (!inst.ic.periodic) return kConstraintSentinel;
    return inner ? inner(inst.ic) : 0.0;
}

double ace_boundary_energy(const Field2D& f) {
    double s = 0.0;
    int count = 0;
    for (int iy = 0; iy < f.ny; ++iy) {
        s += f.at(0, iy) * f.at(0, iy);
        ++count;
    }
    for (int ix = 1; ix < f.nx; ++ix) {
        s += f.at(ix, 0) * f.at(ix, 0);
        ++count;
    }
    return s / count;
}

} // namespace lielac
