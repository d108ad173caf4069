#include "lielac/fields.hpp"

#include "lielac/errors.hpp"
#include "lielac/jet.hpp"
#include "lielac/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lielac {

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kTwoPi = 2.0 * kPi;
// Group parameters below this magnitude are treated as exactly
// periodicity-preserving (optimizer round-off never unflags a field).
constexpr double kPeriodicTol = 1e-9;
} // namespace

// ---------------------------------------------------------------------------
// Field1D
// ---------------------------------------------------------------------------

Field1D Field1D::uniform(double x_lo, double length, int n, bool periodic, double time) {
    if (n < 2) throw std::invalid_argument("Field1D::uniform: need at least 2 samples");
    if (!(length > 0.0)) throw std::invalid_argument("Field1D::uniform: length must be positive");
    Field1D f;
    f.x_lo = x_lo;
    f.dx = periodic ? length / n : length / (n - 1);
    f.span = length;
    f.values.assign(static_cast<std::size_t>(n), 0.0);
    f.time = time;
    f.periodic = periodic;
    return f;
}

double Field1D::value_at(double x) const {
    const int m = n();
    if (periodic) {
        const double period = m * dx;
        double s = (x - x_lo) / dx;
        s -= std::floor(s / m) * m;
        if (s >= m) s -= m; // guard against round-off at the seam
        const int j = static_cast<int>(s);
        const double w = s - j;
        (void)period;
        return values[j] * (1.0 - w) + values[(j + 1) % m] * w;
    }
    double s = (x - x_lo) / dx;
    s = std::clamp(s, 0.0, static_cast<double>(m - 1));
    const int j = std::min(static_cast<int>(s), m - 2);
    const double w = s - j;
    return values[j] * (1.0 - w) + values[j + 1] * w;
}

double Field1D::mean() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s / n();
}

double Field1D::max_abs() const {
    double s = 0.0;
    for (double v : values) s = std::max(s, std::abs(v));
    return s;
}

bool same_grid(const Field1D& a, const Field1D& b, double tol) {
    return a.n() == b.n() && a.periodic == b.periodic &&
           std::abs(a.x_lo - b.x_lo) <= tol && std::abs(a.dx - b.dx) <= tol &&
           std::abs(a.span - b.span) <= tol;
}

// ---------------------------------------------------------------------------
// Field2D
// ---------------------------------------------------------------------------

Field2D Field2D::zeros(int nx, int ny, double time) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("Field2D::zeros: grid too small");
    Field2D f;
    f.nx = nx;
    f.ny = ny;
    f.values.assign(static_cast<std::size_t>(nx) * ny, 0.0);
    f.time = time;
    return f;
}

double Field2D::value_at(double xq, double yq) const {
    double sx = xq * nx;
    double sy = yq * ny;
    sx -= std::floor(sx / nx) * nx;
    sy -= std::floor(sy / ny) * ny;
    if (sx >= nx) sx -= nx;
    if (sy >= ny) sy -= ny;
    const int i = static_cast<int>(sx), j = static_cast<int>(sy);
    const double wx = sx - i, wy = sy - j;
    const int ip = (i + 1) % nx, jp = (j + 1) % ny;
    return at(i, j) * (1.0 - wx) * (1.0 - wy) + at(ip, j) * wx * (1.0 - wy) +
           at(i, jp) * (1.0 - wx) * wy + at(ip, jp) * wx * wy;
}

// ---------------------------------------------------------------------------
// Transforms
// ---------------------------------------------------------------------------

namespace {

/// Shared scatter-relabel scheme for the 1D groups: x~ is affine in x at
/// fixed t, so the transformed nodes are again uniform and the output is an
/// exact relabeling of the pointwise-acted scatter.
template <typename UAct>
Field1D transform_affine(const Field1D& f, double alpha, double beta, double gamma,
                         double delta, double lambda1, double lambda0, bool keep_periodic,
                         UAct&& u_act) {
    const double t = f.time;
    const double den = gamma * t + delta;
    if (std::abs(den) < kSingularTol) {
        throw SingularTransform("transform_ic: field time maps through the singularity");
    }
    const double inv = 1.0 / den;
    const double sdx = f.dx * inv;
    const int m = f.n();
    if (f.span * std::abs(inv) < 1e-9) {
        throw DegenerateDomain("transform_ic: transformed interval is degenerate");
    }

    Field1D out;
    out.time = (alpha * t + beta) * inv;
    out.periodic = f.periodic && keep_periodic;
    out.dx = std::abs(sdx);
    out.span = f.span * std::abs(inv);
    const auto xt = [&](double x) { return (x + lambda1 * t + lambda0) * inv; };
    out.values.resize(static_cast<std::size_t>(m));
    if (sdx > 0.0) {
        out.x_lo = xt(f.x(0));
        for (int i = 0; i < m; ++i) out.values[i] = u_act(f.x(i), f.values[i]);
    } else {
        out.x_lo = xt(f.x(m - 1));
        for (int i = 0; i < m; ++i) out.values[m - 1 - i] = u_act(f.x(i), f.values[i]);
    }
    return out;
}

} // namespace

Field1D transform_ic_heat(const HeatGroupElement& g, double nu, const Field1D& f) {
    const bool keep = std::abs(g.a.gamma) <= kPeriodicTol && std::abs(g.h.lambda1) <= kPeriodicTol;
    const double t = f.time;
    return transform_affine(
        f, g.a.alpha, g.a.beta, g.a.gamma, g.a.delta, g.h.lambda1, g.h.lambda0, keep,
        [&](double x, double u) { return heat_act_point(g, nu, {t, x, u}).u; });
}

Field1D transform_ic_burgers(const BurgersGroupElement& g, const Field1D& f) {
    const bool keep = std::abs(g.a.gamma) <= kPeriodicTol;
    const double t = f.time;
    return transform_affine(
        f, g.a.alpha, g.a.beta, g.a.gamma, g.a.delta, g.lambda1, g.lambda0, keep,
        [&](double x, double u) { return burgers_act_point(g, {t, x, u}).u; });
}

QueryWindow transform_window(const Sl2Matrix& a, double lambda1, double lambda0,
                             const QueryWindow& w) {
    QueryWindow out = w;
    double first_den = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double den = a.gamma * w.ct[i] + a.delta;
        if (std::abs(den) < kSingularTol || (i > 0 && den * first_den < 0.0)) {
            throw SingularTransform("transform_window: singularity inside the time window");
        }
        if (i == 0) first_den = den;
        out.ct[i] = (a.alpha * w.ct[i] + a.beta) / den;
        out.cx[i] = (w.cx[i] + lambda1 * w.ct[i] + lambda0) / den;
    }
    return out;
}

Field2D transform_ic_ace(const Se2Element& g, double t_shift, const Field2D& f) {
    Field2D out = f;
    out.time = f.time + t_shift;

    // Exact permutation path: quarter turn and grid-aligned translation.
    const double quarter = kPi / 2.0;
    const double kf = g.theta / quarter;
    const int k = static_cast<int>(std::llround(kf)) & 3;
    const bool quarter_turn = std::abs(g.theta - std::llround(kf) * quarter) <= 1e-12;
    if (quarter_turn && f.nx == f.ny) {
        const int n = f.nx;
        const double cxf = g.tx * n, cyf = g.ty * n;
        const long cx = std::lround(cxf), cy = std::lround(cyf);
        if (std::abs(cxf - cx) <= 1e-9 && std::abs(cyf - cy) <= 1e-9) {
            // Source node of target (ix, iy): q = R(-k) (p - t), in cell units.
            static const int rc[4] = {1, 0, -1, 0}; // cos(-k*pi/2) = cos(k*pi/2)
            static const int rs[4] = {0, -1, 0, 1}; // sin(-k*pi/2)
            const auto mod = [n](long v) { return static_cast<int>(((v % n) + n) % n); };
            for (int ix = 0; ix < n; ++ix) {
                const long px = ix - cx;
                for (int iy = 0; iy < n; ++iy) {
                    const long py = iy - cy;
                    const long qx = rc[k] * px - rs[k] * py;
                    const long qy = rs[k] * px + rc[k] * py;
                    out.at(ix, iy) = f.at(mod(qx), mod(qy));
                }
            }
            return out;
        }
    }

    // General path: bilinear resample with periodic wrap.
    const double c = std::cos(g.theta), s = std::sin(g.theta);
    for (int ix = 0; ix < f.nx; ++ix) {
        const double px = out.x(ix) - g.tx;
        for (int iy = 0; iy < f.ny; ++iy) {
            const double py = out.y(iy) - g.ty;
            const double qx = c * px + s * py;
            const double qy = -s * px + c * py;
            out.at(ix, iy) = f.value_at(qx, qy);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Jet statistics
// ---------------------------------------------------------------------------

JetBounds jet_bounds(const Field1D& f) {
    JetBounds b;
    const auto [lo, hi] = std::minmax_element(f.values.begin(), f.values.end());
    b.u_min = *lo;
    b.u_max = *hi;
    b.x_min = f.x_lo;
    b.x_max = f.x_hi();
    b.t_min = b.t_max = f.time;
    return b;
}

JetBounds jet_bounds(const Field1D& f, const QueryWindow&) {
    return jet_bounds(f);
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

Field1D gen_sine_ic(const SineICParams& p, int n) {
    if (p.K < 1) throw std::invalid_argument("gen_sine_ic: K must be >= 1");
    if (static_cast<int>(p.amps.size()) != p.K || static_cast<int>(p.freqs.size()) != p.K ||
        static_cast<int>(p.phases.size()) != p.K) {
        throw std::invalid_argument("gen_sine_ic: coefficient arrays must have length K");
    }
    Field1D f = Field1D::uniform(0.0, p.L, n, /*periodic=*/true);
    for (int i = 0; i < n; ++i) {
        const double x = f.x(i);
        double u = 0.0;
        for (int k = 0; k < p.K; ++k) {
            u += p.amps[k] * std::sin(kTwoPi * p.freqs[k] * x / p.L + p.phases[k]);
        }
        f.values[i] = u;
    }
    return f;
}

Field1D gen_grf_ic(const GrfParams& p, int n, std::uint64_t seed) {
    if (n < 8) throw std::invalid_argument("gen_grf_ic: need at least 8 samples");
    if (p.power < 1) throw std::invalid_argument("gen_grf_ic: power must be >= 1");
    Rng rng(seed);
    const int kmax = n / 2 - 1;
    std::vector<double> ac(kmax + 1, 0.0), bc(kmax + 1, 0.0);
    for (int k = 1; k <= kmax; ++k) {
        const double w = kTwoPi * k;
        const double sd = p.scale * std::pow(w * w + p.shift * p.shift, -0.5 * p.power);
        ac[k] = sd * rng.gaussian();
        bc[k] = sd * rng.gaussian();
    }
    Field1D f = Field1D::uniform(0.0, 1.0, n, /*periodic=*/true);
    for (int i = 0; i < n; ++i) {
        const double x = f.x(i);
        double u = 0.0;
        for (int k = 1; k <= kmax; ++k) {
            u += ac[k] * std::cos(kTwoPi * k * x) + bc[k] * std::sin(kTwoPi * k * x);
        }
        f.values[i] = u;
    }
    // Pin the mean exactly: remove the empirical zero mode, then offset.
    const double m = f.mean();
    for (double& v : f.values) v = v - m + p.mean_offset;
    return f;
}

AceIcParams AceIcParams::random(std::uint64_t seed) {
    Rng rng(seed);
    AceIcParams p;
    p.K = static_cast<int>(rng.uniform_int(16, 32));
    p.r = rng.uniform(0.7, 1.0);
    p.a_coeffs.resize(static_cast<std::size_t>(p.K) * p.K);
    for (double& a : p.a_coeffs) a = rng.uniform(-1.0, 1.0);
    return p;
}

Field2D gen_ace_ic(const AceIcParams& p, int n) {
    if (n < 16) throw std::invalid_argument("gen_ace_ic: need at least 16 samples per axis");
    if (p.K < 1 || static_cast<int>(p.a_coeffs.size()) != p.K * p.K) {
        throw std::invalid_argument("gen_ace_ic: coefficient matrix must be K x K");
    }
    const auto saw = [](double v) { return v - std::floor(v); };

    // Separable evaluation: sx[i][ix] = sin(pi (i+1) {x - x0}), likewise sy.
    std::vector<double> sx(static_cast<std::size_t>(p.K) * n), sy(sx.size());
    for (int i = 0; i < p.K; ++i) {
        for (int q = 0; q < n; ++q) {
            const double xs = saw(static_cast<double>(q) / n - p.x0_shift);
            const double ys = saw(static_cast<double>(q) / n - p.y0_shift);
            sx[static_cast<std::size_t>(i) * n + q] = std::sin(kPi * (i + 1) * xs);
            sy[static_cast<std::size_t>(i) * n + q] = std::sin(kPi * (i + 1) * ys);
        }
    }
    // w[i][iy] = sum_j a_ij (i^2+j^2)^{-r} sy[j][iy]
    std::vector<double> w(static_cast<std::size_t>(p.K) * n, 0.0);
    for (int i = 0; i < p.K; ++i) {
        for (int j = 0; j < p.K; ++j) {
            const double c = p.a_coeffs[static_cast<std::size_t>(i) * p.K + j] *
                             std::pow(double((i + 1) * (i + 1) + (j + 1) * (j + 1)), -p.r);
            if (c == 0.0) continue;
            for (int iy = 0; iy < n; ++iy) {
                w[static_cast<std::size_t>(i) * n + iy] += c * sy[static_cast<std::size_t>(j) * n + iy];
            }
        }
    }
    Field2D f = Field2D::zeros(n, n);
    for (int ix = 0; ix < n; ++ix) {
        for (int iy = 0; iy < n; ++iy) {
            double u = 0.0;
            for (int i = 0; i < p.K; ++i) {
                u += sx[static_cast<std::size_t>(i) * n + ix] * w[static_cast<std::size_t>(i) * n + iy];
            }
            f.at(ix, iy) = u;
        }
    }
    return f;
}

} // namespace lielac
