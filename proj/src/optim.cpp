#include "lielac/optim.hpp"

#include <stdexcept>

namespace lielac {

ProblemInstance HeatOps::act(const Element& g, const Instance& x) const {
    return {transform_ic_heat(g, nu, x.ic),
            transform_window(g.a, g.h.lambda1, g.h.lambda0, x.query), x.group};
}

ProblemInstance BurgersOps::act(const Element& g, const Instance& x) const {
    return {transform_ic_burgers(g, x.ic),
            transform_window(g.a, g.lambda1, g.lambda0, x.query), x.group};
}

// ---------------------------------------------------------------------------
// Discrete ACE group
// ---------------------------------------------------------------------------

namespace {
// R_k = [[rc, -rs], [rs, rc]] for a counterclockwise quarter turn k.
constexpr int kRc[4] = {1, 0, -1, 0};
constexpr int kRs[4] = {0, 1, 0, -1};

int mod(int v, int n) { return ((v % n) + n) % n; }
} // namespace

AceDiscreteElement ace_compose(const AceDiscreteElement& a, const AceDiscreteElement& b, int n) {
    // (k1,d1)*(k2,d2) = (k1+k2, d1 + R_{k1} d2)
    const int k = (a.k + b.k) & 3;
    const int dx = mod(a.dx + kRc[a.k] * b.dx - kRs[a.k] * b.dy, n);
    const int dy = mod(a.dy + kRs[a.k] * b.dx + kRc[a.k] * b.dy, n);
    return {k, dx, dy};
}

AceDiscreteElement ace_inverse(const AceDiscreteElement& a, int n) {
    const int k = (4 - a.k) & 3; // -a.k mod 4
    const int dx = mod(-(kRc[k] * a.dx - kRs[k] * a.dy), n);
    const int dy = mod(-(kRs[k] * a.dx + kRc[k] * a.dy), n);
    return {k, dx, dy};
}

std::array<int, 2> ace_source_index(const AceDiscreteElement& e, int n, int ix, int iy) {
    // source = R_{-k}(target - c - d) + c, c = n/2 (rotation about the center)
    const int c = n / 2;
    const int ax = ix - c - e.dx;
    const int ay = iy - c - e.dy;
    const int ki = (4 - e.k) & 3;
    const int sx = kRc[ki] * ax - kRs[ki] * ay + c;
    const int sy = kRs[ki] * ax + kRc[ki] * ay + c;
    return {mod(sx, n), mod(sy, n)};
}

Field2D ace_act(const AceDiscreteElement& e, const Field2D& f) {
    if (f.nx != f.ny || f.nx % 2 != 0) {
        throw std::invalid_argument("ace_act: field must be square with even size");
    }
    Field2D out = f;
    const int n = f.nx;
    for (int ix = 0; ix < n; ++ix) {
        for (int iy = 0; iy < n; ++iy) {
            const auto [sx, sy] = ace_source_index(e, n, ix, iy);
            out.at(ix, iy) = f.at(sx, sy);
        }
    }
    return out;
}

Se2Element ace_to_se2(const AceDiscreteElement& e, int n) {
    // g(p) = R_k (p - c) + c + d in unit coordinates.
    const double c = 0.5;
    const double rcx = kRc[e.k] * c - kRs[e.k] * c;
    const double rcy = kRs[e.k] * c + kRc[e.k] * c;
    constexpr double kHalfPi = 1.5707963267948966192313216916398;
    return {e.k * kHalfPi, c - rcx + static_cast<double>(e.dx) / n,
            c - rcy + static_cast<double>(e.dy) / n};
}

namespace {

/// Lexicographic comparison of two candidate matrices h1.x vs h2.x without
/// materializing them; ties in energy are broken by this canonical,
/// orbit-representative-independent order.
bool ace_lex_less(const Field2D& f, const AceDiscreteElement& h1, const AceDiscreteElement& h2) {
    const int n = f.nx;
    for (int ix = 0; ix < n; ++ix) {
        for (int iy = 0; iy < n; ++iy) {
            const auto [ax, ay] = ace_source_index(h1, n, ix, iy);
            const auto [bx, by] = ace_source_index(h2, n, ix, iy);
            const double va = f.at(ax, ay), vb = f.at(bx, by);
            if (va < vb) return true;
            if (va > vb) return false;
        }
    }
    return false;
}

} // namespace

AceCanonResult ace_canonicalize(const ProblemInstance2D& inst,
                                const std::function<double(const Field2D&)>& inner) {
    const Field2D& f = inst.ic;
    if (f.nx != f.ny || f.nx % 2 != 0) {
        throw std::invalid_argument("ace_canonicalize: field must be square with even size");
    }
    const int n = f.nx;

    bool have_best = false;
    AceDiscreteElement best;
    double best_e = 0.0;
    Field2D best_field;
    for (int k = 0; k < 4; ++k) {
        for (int dx = 0; dx < n; ++dx) {
            for (int dy = 0; dy < n; ++dy) {
                const AceDiscreteElement h{k, dx, dy};
                const Field2D cand = ace_act(h, f);
                const double e = inner ? inner(cand) : 0.0;
                if (!have_best || e < best_e ||
                    (e == best_e && ace_lex_less(f, h, best))) {
                    have_best = true;
                    best = h;
                    best_e = e;
                    best_field = cand;
                }
            }
        }
    }

    AceCanonResult res;
    res.canonical = inst;
    res.canonical.ic = std::move(best_field);
    res.g_inv = best;
    res.g = ace_inverse(best, n);
    res.final_energy = best_e;
    return res;
}

} // namespace lielac
