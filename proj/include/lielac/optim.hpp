#pragma once

#include "lielac/energy.hpp"
#include "lielac/errors.hpp"
#include "lielac/fields.hpp"
#include "lielac/groups.hpp"
#include "lielac/jet.hpp"
#include "lielac/rng.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace lielac {

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

enum class CoordPick { cyclic, random };
enum class Algorithm { global_retraction, lie_descent, coordinate_descent };

struct StepSchedule {
    double eta0 = 0.05;
    double decay = 1.0; // eta_i = eta0 * decay^i, in (0, 1]
};

struct OptimConfig {
    int n_outer = 4;
    int n_inner = 50;
    int n_steps = 200;
    StepSchedule step;
    double fd_step = 1e-4;
    int num_inits = 16;
    double init_scale = 0.3;
    std::uint64_t seed = 0;
    CoordPick coord_pick = CoordPick::cyclic;
    std::optional<double> proximal_tau;
    // line-search controls for the coordinate algorithm
    double line_search_radius = 1.0;
    int line_search_points = 33;
    int max_backtracks = 20;
};

/// Canonicalization output: canonical = act(g_inv, input) and
/// compose(g, g_inv) = identity.
template <class Ops>
struct CanonResult {
    typename Ops::Instance canonical;
    typename Ops::Element g;
    typename Ops::Element g_inv;
    std::vector<double> energy_trace;
    int init_index = 0;
    double final_energy = 0.0;
};

// ---------------------------------------------------------------------------
// Group-operation bundles (the "Ops" concept used by the algorithms):
//   Element, Instance, dim(), identity(), compose(), inverse(),
//   exp_train(span<double>), exp_gen(index, lam), act(Element, Instance).
// ---------------------------------------------------------------------------

struct HeatOps {
    using Element = HeatGroupElement;
    using Instance = ProblemInstance;

    double nu = 0.1;

    int dim() const { return 6; }
    Element identity() const { return Element::identity(); }
    Element compose(const Element& a, const Element& b) const { return heat_compose(a, b); }
    Element inverse(const Element& a) const { return heat_inverse(a); }
    Element exp_train(std::span<const double> c) const { return heat_exp_train(c); }
    Element exp_gen(int index, double lam) const { return heat_exp_gen(index, lam); }
    Instance act(const Element& g, const Instance& x) const;
    JetPoint act_jet(const Element& g, const JetPoint& p) const { return heat_act_point(g, nu, p); }
};

struct BurgersOps {
    using Element = BurgersGroupElement;
    using Instance = ProblemInstance;

    int dim() const { return 5; }
    Element identity() const { return Element::identity(); }
    Element compose(const Element& a, const Element& b) const { return burgers_compose(a, b); }
    Element inverse(const Element& a) const { return burgers_inverse(a); }
    Element exp_train(std::span<const double> c) const { return burgers_exp_train(c); }
    Element exp_gen(int index, double lam) const { return burgers_exp_gen(index, lam); }
    Instance act(const Element& g, const Instance& x) const;
    JetPoint act_jet(const Element& g, const JetPoint& p) const { return burgers_act_point(g, p); }
};

struct So2Ops {
    using Element = So2Element;
    using Instance = std::array<double, 2>;

    int dim() const { return 1; }
    Element identity() const { return Element::identity(); }
    Element compose(const Element& a, const Element& b) const { return so2_compose(a, b); }
    Element inverse(const Element& a) const { return so2_inverse(a); }
    Element exp_train(std::span<const double> c) const { return so2_exp_train(c); }
    Element exp_gen(int, double lam) const { return Element{lam}; }
    Instance act(const Element& g, const Instance& p) const {
        const double c = std::cos(g.theta), s = std::sin(g.theta);
        return {c * p[0] - s * p[1], s * p[0] + c * p[1]};
    }
};

// ---------------------------------------------------------------------------
// Finite-difference gradient on Lie-algebra coefficients
// ---------------------------------------------------------------------------

namespace detail {

/// Evaluates an energy, mapping singular transforms to +infinity.
template <class Ops, class EnergyFn>
double guarded_energy(const Ops& ops, const EnergyFn& energy,
                      const typename Ops::Element& g, const typename Ops::Instance& x) {
    try {
        const double e = energy(ops.act(g, x));
        return std::isnan(e) ? std::numeric_limits<double>::infinity() : e;
    } catch (const SingularTransform&) {
        return std::numeric_limits<double>::infinity();
    } catch (const DegenerateDomain&) {
        return std::numeric_limits<double>::infinity();
    }
}

/// Coefficient-space probe; overflowing coefficients (exp_train cannot form
/// a valid element) also read as +infinity so backtracking can recover.
template <class Ops, class EnergyFn>
double probe_energy(const Ops& ops, const EnergyFn& energy, std::span<const double> xi,
                    const typename Ops::Instance& x) {
    try {
        return guarded_energy(ops, energy, ops.exp_train(xi), x);
    } catch (const std::invalid_argument&) {
        return std::numeric_limits<double>::infinity();
    }
}

} // namespace detail

/// Central-difference gradient of xi -> E(exp_train(xi) . x).
///
/// The domain-distance energies are piecewise linear; at a kink minimum of a
/// coordinate both one-sided probes lie uphill while the plain central
/// difference still reports a large slope, which would turn the step into an
/// ascent direction. Such coordinates get gradient zero (on smooth energies
/// this reduces to the ordinary central difference).
///
/// Throws NonFiniteEnergy when a probe hits a singular configuration; the
/// caller shrinks fd_step or treats the step as stalled.
template <class Ops, class EnergyFn>
std::vector<double> fd_grad(const Ops& ops, const EnergyFn& energy,
                            std::span<const double> xi, const typename Ops::Instance& x,
                            double fd_step) {
    const double e0 = detail::probe_energy(ops, energy, xi, x);
    std::vector<double> grad(xi.size(), 0.0);
    std::vector<double> probe(xi.begin(), xi.end());
    for (std::size_t i = 0; i < xi.size(); ++i) {
        probe[i] = xi[i] + fd_step;
        const double ep = detail::probe_energy(ops, energy, probe, x);
        probe[i] = xi[i] - fd_step;
        const double em = detail::probe_energy(ops, energy, probe, x);
        probe[i] = xi[i];
        if (!std::isfinite(ep) || !std::isfinite(em)) {
            throw NonFiniteEnergy("fd_grad: probe hit a singular or non-finite energy");
        }
        grad[i] = (ep > e0 && em > e0) ? 0.0 : (ep - em) / (2.0 * fd_step);
    }
    return grad;
}

// ---------------------------------------------------------------------------
// Algorithm 1: descent on coefficients through a global retraction
// ---------------------------------------------------------------------------

template <class Ops, class EnergyFn>
CanonResult<Ops> alg1_global_retraction(const Ops& ops, const EnergyFn& energy,
                                        const typename Ops::Instance& x, const OptimConfig& cfg,
                                        std::span<const double> xi0 = {}) {
    const int d = ops.dim();
    std::vector<double> xi(static_cast<std::size_t>(d), 0.0);
    if (!xi0.empty()) xi.assign(xi0.begin(), xi0.end());

    double e_cur = detail::probe_energy(ops, energy, xi, x);
    if (!std::isfinite(e_cur)) {
        throw NoFiniteStart("alg1: energy non-finite at the initialization");
    }
    std::vector<double> trace{e_cur};

    double fd = cfg.fd_step;
    for (int i = 0; i < cfg.n_steps; ++i) {
        std::vector<double> grad;
        bool have_grad = false;
        for (int attempt = 0; attempt < 8 && !have_grad; ++attempt) {
            try {
                grad = fd_grad(ops, energy, xi, x, fd);
                have_grad = true;
            } catch (const NonFiniteEnergy&) {
                fd *= 0.5;
            }
        }
        if (!have_grad) break;

        double gnorm = 0.0;
        for (double g : grad) gnorm = std::max(gnorm, std::abs(g));
        if (gnorm == 0.0) break;

        const double eta_i = cfg.step.eta0 * std::pow(cfg.step.decay, i);
        double eta = eta_i;
        bool accepted = false;
        std::vector<double> cand(xi.size());
        for (int bt = 0; bt <= cfg.max_backtracks; ++bt) {
            for (std::size_t k = 0; k < xi.size(); ++k) cand[k] = xi[k] - eta * grad[k];
            const double e_new = detail::probe_energy(ops, energy, cand, x);
            if (std::isfinite(e_new) && e_new < e_cur) {
                xi = cand;
                e_cur = e_new;
                trace.push_back(e_cur);
                accepted = true;
                break;
            }
            eta *= 0.5;
        }
        if (!accepted) break; // stalled at a kink or plateau
    }

    CanonResult<Ops> res;
    res.g_inv = ops.exp_train(xi);
    res.g = ops.inverse(res.g_inv);
    res.canonical = ops.act(res.g_inv, x);
    res.energy_trace = std::move(trace);
    res.final_energy = e_cur;
    return res;
}

// ---------------------------------------------------------------------------
// Algorithm 2: Lie-algebra descent with tangent-plane recalibration
// ---------------------------------------------------------------------------

template <class Ops, class EnergyFn>
CanonResult<Ops> alg2_lie_descent(const Ops& ops, const EnergyFn& energy,
                                  const typename Ops::Instance& x, const OptimConfig& cfg,
                                  std::span<const double> xi0 = {}) {
    const int d = ops.dim();
    std::vector<typename Ops::Element> factors; // ordered product = g_inv
    typename Ops::Element g_inv = ops.identity();
    if (!xi0.empty()) {
        bool nonzero = false;
        for (double v : xi0) nonzero |= (v != 0.0);
        if (nonzero) {
            factors.push_back(ops.exp_train(xi0));
            g_inv = factors.back();
        }
    }

    double e_cur = detail::guarded_energy(ops, energy, g_inv, x);
    if (!std::isfinite(e_cur)) {
        throw NoFiniteStart("alg2: energy non-finite at the initialization");
    }
    std::vector<double> trace{e_cur};

    for (int outer = 0; outer < cfg.n_outer; ++outer) {
        std::vector<double> xi(static_cast<std::size_t>(d), 0.0);
        // Inner objective: xi -> E(g_inv * exp_train(xi)^{-1} . x).
        const auto inner_energy = [&](std::span<const double> c) {
            try {
                const auto elem = ops.compose(g_inv, ops.inverse(ops.exp_train(c)));
                return detail::guarded_energy(ops, energy, elem, x);
            } catch (const std::invalid_argument&) {
                return std::numeric_limits<double>::infinity();
            }
        };

        double fd = cfg.fd_step;
        bool moved = false;
        for (int i = 0; i < cfg.n_inner; ++i) {
            std::vector<double> grad(xi.size(), 0.0);
            bool have_grad = true;
            std::vector<double> probe = xi;
            const double e_here = inner_energy(xi);
            for (std::size_t k = 0; k < xi.size() && have_grad; ++k) {
                probe[k] = xi[k] + fd;
                const double ep = inner_energy(probe);
                probe[k] = xi[k] - fd;
                const double em = inner_energy(probe);
                probe[k] = xi[k];
                if (!std::isfinite(ep) || !std::isfinite(em)) have_grad = false;
                else grad[k] = (ep > e_here && em > e_here) ? 0.0 : (ep - em) / (2.0 * fd);
            }
            if (!have_grad) { fd *= 0.5; continue; }

            double gnorm = 0.0;
            for (double g : grad) gnorm = std::max(gnorm, std::abs(g));
            if (gnorm == 0.0) break;

            double eta = cfg.step.eta0 * std::pow(cfg.step.decay, i);
            bool accepted = false;
            std::vector<double> cand(xi.size());
            for (int bt = 0; bt <= cfg.max_backtracks; ++bt) {
                for (std::size_t k = 0; k < xi.size(); ++k) cand[k] = xi[k] - eta * grad[k];
                const double e_new = inner_energy(cand);
                if (std::isfinite(e_new) && e_new < e_cur) {
                    xi = cand;
                    e_cur = e_new;
                    trace.push_back(e_cur);
                    accepted = true;
                    break;
                }
                eta *= 0.5;
            }
            if (!accepted) break;
            moved = true;
        }

        if (!moved) break;
        // Recalibrate with the exact group inverse of the inner factor so the
        // reconstructed g below is an exact inverse of g_inv.
        factors.push_back(ops.inverse(ops.exp_train(xi)));
        g_inv = ops.compose(g_inv, factors.back());
    }

    CanonResult<Ops> res;
    res.g_inv = g_inv;
    typename Ops::Element g = ops.identity();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        g = ops.compose(g, ops.inverse(*it));
    }
    res.g = g;
    res.canonical = ops.act(res.g_inv, x);
    res.energy_trace = std::move(trace);
    res.final_energy = e_cur;
    return res;
}

// ---------------------------------------------------------------------------
// Algorithm 3: coordinate descent with a 1D line search per generator
// ---------------------------------------------------------------------------

namespace detail {

/// Golden-section refinement of a bracketed 1D minimum.
template <class Fn>
double golden_min(const Fn& f, double a, double b, int iters = 60) {
    constexpr double inv_phi = 0.61803398874989484820458683436564;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 <= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? x1 : x2;
}

} // namespace detail

template <class Ops, class EnergyFn>
CanonResult<Ops> alg3_coordinate_descent(const Ops& ops, const EnergyFn& energy,
                                         const typename Ops::Instance& x, const OptimConfig& cfg,
                                         std::span<const double> xi0 = {},
                                         std::uint64_t pick_seed = 0) {
    const int d = ops.dim();
    std::vector<typename Ops::Element> factors;
    typename Ops::Element g_inv = ops.identity();
    if (!xi0.empty()) {
        bool nonzero = false;
        for (double v : xi0) nonzero |= (v != 0.0);
        if (nonzero) {
            factors.push_back(ops.exp_train(xi0));
            g_inv = factors.back();
        }
    }

    double e_cur = detail::guarded_energy(ops, energy, g_inv, x);
    if (!std::isfinite(e_cur)) {
        throw NoFiniteStart("alg3: energy non-finite at the initialization");
    }
    std::vector<double> trace{e_cur};

    Rng pick_rng(pick_seed);
    int stalled = 0;
    for (int k = 0; k < cfg.n_steps && stalled < d; ++k) {
        const int j = cfg.coord_pick == CoordPick::cyclic
                          ? 1 + (k % d)
                          : 1 + static_cast<int>(pick_rng.uniform_int(0, d - 1));

        const auto h = [&](double lam) {
            double e = detail::guarded_energy(
                ops, energy, ops.compose(g_inv, ops.exp_gen(j, -lam)), x);
            if (cfg.proximal_tau && std::isfinite(e)) {
                e += lam * lam / (2.0 * *cfg.proximal_tau);
            }
            return e;
        };

        // Coarse scan including lambda = 0, then golden-section refinement.
        const int m = std::max(3, cfg.line_search_points | 1);
        const double R = cfg.line_search_radius;
        int best_i = (m - 1) / 2;
        double best_v = h(0.0);
        for (int i = 0; i < m; ++i) {
            const double lam = -R + 2.0 * R * i / (m - 1);
            const double v = h(lam);
            if (v < best_v) { best_v = v; best_i = i; }
        }
        const double lam_lo = -R + 2.0 * R * std::max(0, best_i - 1) / (m - 1);
        const double lam_hi = -R + 2.0 * R * std::min(m - 1, best_i + 1) / (m - 1);
        const double lam = detail::golden_min(h, lam_lo, lam_hi);
        const double e_new = h(lam);

        if (std::isfinite(e_new) && e_new < e_cur) {
            factors.push_back(ops.exp_gen(j, -lam));
            g_inv = ops.compose(g_inv, factors.back());
            e_cur = detail::guarded_energy(ops, energy, g_inv, x); // without proximal term
            trace.push_back(e_cur);
            stalled = 0;
        } else {
            ++stalled;
        }
    }

    CanonResult<Ops> res;
    res.g_inv = g_inv;
    typename Ops::Element g = ops.identity();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        g = ops.compose(g, ops.inverse(*it));
    }
    res.g = g;
    res.canonical = ops.act(res.g_inv, x);
    res.energy_trace = std::move(trace);
    res.final_energy = e_cur;
    return res;
}

// ---------------------------------------------------------------------------
// Multi-initialization driver
// ---------------------------------------------------------------------------

/// Runs the chosen algorithm from num_inits starting points (index 0 is the
/// identity, the rest uniform in [-init_scale, init_scale]^dim) and returns
/// the run with minimal final energy; ties break toward the lower index.
template <class Ops, class EnergyFn>
CanonResult<Ops> multi_init_canonicalize(Algorithm alg, const Ops& ops, const EnergyFn& energy,
                                         const typename Ops::Instance& x,
                                         const OptimConfig& cfg) {
    if (cfg.num_inits < 1) throw std::invalid_argument("multi_init: num_inits must be >= 1");
    const int d = ops.dim();

    std::vector<std::vector<double>> inits;
    inits.reserve(static_cast<std::size_t>(cfg.num_inits));
    inits.emplace_back(static_cast<std::size_t>(d), 0.0);
    Rng rng(cfg.seed);
    for (int i = 1; i < cfg.num_inits; ++i) {
        std::vector<double> xi(static_cast<std::size_t>(d));
        for (double& v : xi) v = rng.uniform(-cfg.init_scale, cfg.init_scale);
        inits.push_back(std::move(xi));
    }

    std::optional<CanonResult<Ops>> best;
    for (int i = 0; i < cfg.num_inits; ++i) {
        try {
            CanonResult<Ops> r;
            switch (alg) {
            case Algorithm::global_retraction:
                r = alg1_global_retraction(ops, energy, x, cfg, inits[i]);
                break;
            case Algorithm::lie_descent:
                r = alg2_lie_descent(ops, energy, x, cfg, inits[i]);
                break;
            case Algorithm::coordinate_descent:
                r = alg3_coordinate_descent(ops, energy, x, cfg, inits[i],
                                            cfg.seed ^ (0x9e3779b97f4a7c15ULL + i));
                break;
            }
            r.init_index = i;
            if (!best || r.final_energy < best->final_energy) best = std::move(r);
        } catch (const NoFiniteStart&) {
            continue;
        }
    }
    if (!best) throw NoFiniteStart("multi_init: all initializations failed");
    return *best;
}

// ---------------------------------------------------------------------------
// Exact discrete canonicalizer for the Allen-Cahn group
// ---------------------------------------------------------------------------

/// Element of C4 x (grid translations) on an n x n periodic field: rotate by
/// k quarter turns about the domain center, then translate by (dx, dy) cells.
struct AceDiscreteElement {
    int k = 0;  // quarter turns, 0..3
    int dx = 0; // cells, 0..n-1
    int dy = 0;

    bool operator==(const AceDiscreteElement&) const = default;
};

AceDiscreteElement ace_compose(const AceDiscreteElement& a, const AceDiscreteElement& b, int n);
AceDiscreteElement ace_inverse(const AceDiscreteElement& a, int n);

/// Source node read by target node (ix, iy) under the element's pull-back.
std::array<int, 2> ace_source_index(const AceDiscreteElement& e, int n, int ix, int iy);

/// Exact permutation action on a square periodic field (n even).
Field2D ace_act(const AceDiscreteElement& e, const Field2D& f);

/// Continuous SE(2) element realizing the discrete one.
Se2Element ace_to_se2(const AceDiscreteElement& e, int n);

struct AceCanonResult {
    ProblemInstance2D canonical;
    AceDiscreteElement g;
    AceDiscreteElement g_inv;
    double final_energy = 0.0;
};

/// Exhaustive search over all 4*n*n elements; the argmin key is
/// (energy, lexicographic candidate matrix), which makes the canonical field
/// exactly invariant: canon(g.x) == canon(x) bitwise for every discrete g.
AceCanonResult ace_canonicalize(const ProblemInstance2D& inst,
                                const std::function<double(const Field2D&)>& inner);

} // namespace lielac
