#include "lielac/pipeline.hpp"

#include <array>
#include <cmath>
#include <span>

namespace lielac {

namespace {

double norm2(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double diff_norm2(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

} // namespace

double rel_l2_error(const Field1D& a, const Field1D& b) {
    if (!same_grid(a, b, 1e-9)) throw GridMismatch("rel_l2_error: fields on different grids");
    const double nb = norm2(b.values);
    const double nd = diff_norm2(a.values, b.values);
    if (nb < 1e-14) return norm2(a.values);
    return nd / nb;
}

double rel_l2_error(const Field2D& a, const Field2D& b) {
    if (a.nx != b.nx || a.ny != b.ny) throw GridMismatch("rel_l2_error: fields on different grids");
    const double nb = norm2(b.values);
    const double nd = diff_norm2(a.values, b.values);
    if (nb < 1e-14) return norm2(a.values);
    return nd / nb;
}

namespace {

/// Least-squares fit of y ~ c2 x^2 + c1 x + c0.
std::array<double, 3> quad_fit(std::span<const double> xs, std::span<const double> ys) {
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, b0 = 0, b1 = 0, b2 = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i], x2 = x * x;
        s0 += 1.0;
        s1 += x;
        s2 += x2;
        s3 += x2 * x;
        s4 += x2 * x2;
        b0 += ys[i];
        b1 += ys[i] * x;
        b2 += ys[i] * x2;
    }
    // normal equations, 3x3 Cramer
    const double m[3][3] = {{s4, s3, s2}, {s3, s2, s1}, {s2, s1, s0}};
    const double rhs[3] = {b2, b1, b0};
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (std::abs(det) < 1e-14) return {0.0, 0.0, 0.0};
    const auto solve_col = [&](int col) {
        double a[3][3];
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) a[r][c] = (c == col) ? rhs[r] : m[r][c];
        }
        return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])) /
               det;
    };
    return {solve_col(0), solve_col(1), solve_col(2)};
}

/// Linear fit y ~ c1 x + c0, returned as (0, c1, c0).
std::array<double, 3> lin_fit(std::span<const double> xs, std::span<const double> ys) {
    double s0 = 0, s1 = 0, s2 = 0, b0 = 0, b1 = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        s0 += 1.0;
        s1 += xs[i];
        s2 += xs[i] * xs[i];
        b0 += ys[i];
        b1 += ys[i] * xs[i];
    }
    const double det = s2 * s0 - s1 * s1;
    if (std::abs(det) < 1e-14) return {0.0, 0.0, 0.0};
    return {0.0, (b1 * s0 - b0 * s1) / det, (s2 * b0 - s1 * b1) / det};
}

} // namespace

HeatGroupElement heat_moment_normalizer(const ProblemInstance& inst, double nu,
                                        const HeatEnergyParams& params) {
    HeatOps ops{nu};
    HeatGroupElement h = HeatGroupElement::identity();
    ProblemInstance cur = inst;

    const auto apply = [&](const HeatGroupElement& step) {
        h = heat_compose(step, h);
        cur = ops.act(step, cur);
    };

    // 1. time offset
    if (cur.ic.time != 0.0) apply(heat_exp_gen(2, -cur.ic.time));

    // 2. log-envelope fit over interior local maxima of |u|. A strong
    // envelope shifts the peak locations and biases the fit, but each pass
    // shrinks the warp, so a few iterations converge.
    for (int pass = 0; pass < 3; ++pass) {
        std::vector<double> xs, ys;
        const auto& v = cur.ic.values;
        const int n = cur.ic.n();
        const double floor_mag = 1e-14;
        for (int i = 1; i + 1 < n; ++i) {
            const double a = std::abs(v[i]);
            if (a > std::abs(v[i - 1]) && a >= std::abs(v[i + 1]) && a > floor_mag) {
                xs.push_back(cur.ic.x(i));
                ys.push_back(std::log(a));
            }
        }
        std::array<double, 3> fit{0.0, 0.0, 0.0};
        if (xs.size() >= 4) {
            fit = quad_fit(xs, ys);
        } else if (xs.size() >= 2) {
            fit = lin_fit(xs, ys);
        }
        const double c2 = fit[0], c1 = fit[1];
        if (!std::isfinite(c2) || !std::isfinite(c1) || (c2 == 0.0 && c1 == 0.0)) break;
        // undo exp(c2 x^2 + c1 x): gamma = -4 nu c2, lambda1 = 2 nu c1
        apply(heat_compose(heat_exp_gen(6, 4.0 * nu * c2), heat_exp_gen(5, 2.0 * nu * c1)));
        if (std::abs(c2) < 1e-10 && std::abs(c1) < 1e-10) break;
    }

    // 3. domain onto the training box
    {
        const double target_len = params.domain.x_max - params.domain.x_min;
        const double len = cur.ic.extent();
        if (len > 0.0 && target_len > 0.0 && len != target_len) {
            apply(heat_exp_gen(4, std::log(target_len / len)));
        }
        const double off = params.domain.x_min - cur.ic.x_lo;
        if (off != 0.0) apply(heat_exp_gen(1, off));
    }

    // 4. amplitude onto the training range
    {
        const auto jb = jet_bounds(cur.ic);
        const double half = 0.5 * (jb.u_max - jb.u_min);
        const double target = 0.5 * (params.domain.u_max - params.domain.u_min);
        if (half > 1e-300 && target > 0.0 && half != target) {
            apply(heat_exp_gen(3, -nu * std::log(half / target)));
        }
    }
    return h;
}

CanonResult<HeatOps> canonicalize_heat(const HeatOps& ops, const ProblemInstance& inst,
                                       const OptimConfig& cfg,
                                       const HeatEnergyParams& params, Algorithm alg) {
    const auto energy = [&params](const ProblemInstance& i) { return e_heat(i, params); };

    HeatGroupElement h0 = HeatGroupElement::identity();
    ProblemInstance staged = inst;
    try {
        h0 = heat_moment_normalizer(inst, ops.nu, params);
        staged = ops.act(h0, inst);
    } catch (const Error&) {
        h0 = HeatGroupElement::identity(); // fall back to raw descent
        staged = inst;
    }

    auto res = multi_init_canonicalize(alg, ops, energy, staged, cfg);
    res.g_inv = heat_compose(res.g_inv, h0);
    res.g = heat_inverse(res.g_inv);
    return res;
}

CanonResult<BurgersOps> canonicalize_burgers(const BurgersOps& ops, const ProblemInstance& inst,
                                             const OptimConfig& cfg,
                                             const BurgersEnergyParams& params, Algorithm alg) {
    const auto energy = [&params](const ProblemInstance& i) { return e_burgers(i, params); };
    return multi_init_canonicalize(alg, ops, energy, inst, cfg);
}

AcePipelineResult equivariant_apply_ace(
    const Operator2D& op,
    const std::function<AceCanonResult(const ProblemInstance2D&)>& canonizer,
    const ProblemInstance2D& inst, std::span<const double> query_times,
    double accept_threshold) {
    AcePipelineResult out;
    out.canon = canonizer(inst);
    if (!(out.canon.final_energy <= accept_threshold)) {
        throw CanonicalizationFailed("equivariant_apply_ace: final energy above accept threshold");
    }
    const auto sols = op.solve(out.canon.canonical.ic, query_times);
    out.solutions.reserve(sols.size());
    for (const auto& s : sols) {
        out.solutions.push_back(ace_act(out.canon.g, s));
        out.solutions.back().time = s.time;
    }
    return out;
}

} // namespace lielac
