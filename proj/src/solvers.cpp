#include "lielac/solvers.hpp"

#include "lielac/errors.hpp"
#include "fft.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace lielac {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
using cplx = std::complex<double>;
} // namespace

// ---------------------------------------------------------------------------
// Heat
// ---------------------------------------------------------------------------

std::vector<Field1D> heat_spectral_solve(const Field1D& ic, const HeatConfig& cfg,
                                         std::span<const double> times) {
    if (!ic.periodic) throw NotPeriodic("heat_spectral_solve: periodic field required");
    if (!(cfg.nu > 0.0)) throw std::invalid_argument("heat_spectral_solve: nu must be positive");
    const int n = ic.n();
    const double L = ic.extent();
    auto spec = fft::rfft(ic.values);
    if (cfg.n_modes > 0) {
        for (std::size_t k = static_cast<std::size_t>(cfg.n_modes); k < spec.size(); ++k) {
            spec[k] = 0.0;
        }
    }

    std::vector<Field1D> out;
    out.reserve(times.size());
    for (double t : times) {
        const double dt = t - ic.time;
        if (dt < 0.0) {
            throw std::invalid_argument("heat_spectral_solve: requested time precedes the IC");
        }
        if (dt == 0.0) {
            out.push_back(ic); // bitwise
            continue;
        }
        auto s = spec;
        for (std::size_t k = 1; k < s.size(); ++k) {
            const double kh = kTwoPi * static_cast<double>(k) / L;
            s[k] *= std::exp(-cfg.nu * kh * kh * dt);
        }
        Field1D f = ic;
        f.values = fft::irfft(std::move(s), n);
        f.time = t;
        out.push_back(std::move(f));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Burgers, Cole-Hopf route
// ---------------------------------------------------------------------------

namespace {

/// Spectral zero-padding interpolation of a periodic signal to m >= n nodes.
std::vector<double> spectral_upsample(const std::vector<double>& v, int m) {
    const int n = static_cast<int>(v.size());
    if (m == n) return v;
    auto spec = fft::rfft(v);
    std::vector<cplx> pad(static_cast<std::size_t>(m) / 2 + 1, 0.0);
    const double scale = static_cast<double>(m) / n;
    for (std::size_t k = 0; k < spec.size() && k < pad.size(); ++k) pad[k] = spec[k] * scale;
    // Halve a copied Nyquist bin so energy is not duplicated.
    if (n % 2 == 0 && static_cast<std::size_t>(n / 2) < pad.size() && m > n) {
        pad[static_cast<std::size_t>(n) / 2] *= 0.5;
    }
    return fft::irfft(std::move(pad), m);
}

} // namespace

std::vector<Field1D> burgers_solve(const Field1D& ic, double nu, std::span<const double> times,
                                   double mean_tol, int refine) {
    if (!ic.periodic) throw NotPeriodic("burgers_solve: periodic field required");
    if (!(nu > 0.0)) throw std::invalid_argument("burgers_solve: nu must be positive");
    const double m = ic.mean();
    if (std::abs(m) > mean_tol) {
        throw NonZeroMean("burgers_solve: periodic Cole-Hopf requires a zero-mean IC");
    }

    const int n = ic.n();
    const int nf = n * std::max(1, refine);
    const double L = ic.extent();

    // Zero-mean part on the fine grid.
    std::vector<double> u0(ic.values);
    for (double& v : u0) v -= m;
    const std::vector<double> uf = spectral_upsample(u0, nf);

    // Antiderivative of u0 (zero mode dropped), then w0 = exp(-v/(2 nu)).
    auto spec = fft::rfft(uf);
    std::vector<cplx> vspec(spec.size(), 0.0);
    for (std::size_t k = 1; k < spec.size(); ++k) {
        const double kh = kTwoPi * static_cast<double>(k) / L;
        vspec[k] = spec[k] / cplx(0.0, kh);
    }
    const std::vector<double> v = fft::irfft(std::move(vspec), nf);
    std::vector<double> w0(static_cast<std::size_t>(nf));
    for (int i = 0; i < nf; ++i) w0[i] = std::exp(-v[i] / (2.0 * nu));
    const auto wspec0 = fft::rfft(w0);

    std::vector<Field1D> out;
    out.reserve(times.size());
    for (double t : times) {
        const double dt = t - ic.time;
        if (dt < 0.0) throw std::invalid_argument("burgers_solve: requested time precedes the IC");
        auto ws = wspec0;
        std::vector<cplx> wxs(ws.size());
        for (std::size_t k = 0; k < ws.size(); ++k) {
            const double kh = kTwoPi * static_cast<double>(k) / L;
            ws[k] *= std::exp(-nu * kh * kh * dt);
            wxs[k] = ws[k] * cplx(0.0, kh);
        }
        const auto w = fft::irfft(std::move(ws), nf);
        const auto wx = fft::irfft(std::move(wxs), nf);

        Field1D f = ic;
        f.time = t;
        for (int i = 0; i < n; ++i) {
            const int j = i * (nf / n);
            f.values[i] = -2.0 * nu * wx[j] / w[j] + m;
        }
        out.push_back(std::move(f));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Burgers, integrating-factor RK4 reference
// ---------------------------------------------------------------------------

std::vector<Field1D> burgers_reference_rk4(const Field1D& ic, double nu,
                                           std::span<const double> times,
                                           int refine, double dt_target) {
    if (!ic.periodic) throw NotPeriodic("burgers_reference_rk4: periodic field required");
    const int n = ic.n();
    const int nf = n * std::max(1, refine);
    const double L = ic.extent();
    std::vector<double> u = spectral_upsample(ic.values, nf);
    auto uhat = fft::rfft(u);

    const std::size_t nk = uhat.size();
    std::vector<double> kh(nk);
    for (std::size_t k = 0; k < nk; ++k) kh[k] = kTwoPi * static_cast<double>(k) / L;
    const std::size_t kcut = static_cast<std::size_t>(std::floor(nf / 3.0)); // 2/3 rule

    const auto nonlinear = [&](const std::vector<cplx>& what) {
        auto w = fft::irfft(what, nf);
        for (double& x : w) x = x * x;
        auto w2 = fft::rfft(w);
        std::vector<cplx> res(nk);
        for (std::size_t k = 0; k < nk; ++k) {
            res[k] = (k > kcut) ? cplx(0.0) : cplx(0.0, -0.5 * kh[k]) * w2[k];
        }
        return res;
    };

    std::vector<Field1D> out;
    out.reserve(times.size());
    double t_cur = ic.time;
    std::vector<double> sorted(times.begin(), times.end());
    // March forward through the requested times (assumed nondecreasing).
    for (double t : sorted) {
        const double horizon = t - t_cur;
        if (horizon < 0.0) {
            throw std::invalid_argument("burgers_reference_rk4: times must be nondecreasing");
        }
        if (horizon > 0.0) {
            const int steps = std::max(1, static_cast<int>(std::ceil(horizon / dt_target)));
            const double h = horizon / steps;
            std::vector<double> e1(nk), e2(nk);
            for (std::size_t k = 0; k < nk; ++k) {
                e1[k] = std::exp(-nu * kh[k] * kh[k] * h * 0.5);
                e2[k] = e1[k] * e1[k];
            }
            std::vector<cplx> a(nk), b(nk), c(nk), tmp(nk);
            for (int s = 0; s < steps; ++s) {
                const auto k1 = nonlinear(uhat);
                for (std::size_t k = 0; k < nk; ++k) tmp[k] = e1[k] * (uhat[k] + 0.5 * h * k1[k]);
                const auto k2 = nonlinear(tmp);
                for (std::size_t k = 0; k < nk; ++k) tmp[k] = e1[k] * uhat[k] + 0.5 * h * k2[k];
                const auto k3 = nonlinear(tmp);
                for (std::size_t k = 0; k < nk; ++k) tmp[k] = e2[k] * uhat[k] + h * e1[k] * k3[k];
                const auto k4 = nonlinear(tmp);
                for (std::size_t k = 0; k < nk; ++k) {
                    uhat[k] = e2[k] * uhat[k] +
                              h / 6.0 * (e2[k] * k1[k] + 2.0 * e1[k] * (k2[k] + k3[k]) + k4[k]);
                }
            }
            t_cur = t;
        }
        const auto uf = fft::irfft(uhat, nf);
        Field1D f = ic;
        f.time = t;
        for (int i = 0; i < n; ++i) f.values[i] = uf[static_cast<std::size_t>(i) * (nf / n)];
        out.push_back(std::move(f));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Allen-Cahn
// ---------------------------------------------------------------------------

std::vector<Field2D> ace_solve(const Field2D& ic, const AceConfig& cfg,
                               std::span<const double> times) {
    if (!ic.periodic) throw NotPeriodic("ace_solve: periodic field required");
    const double eps2 = cfg.epsilon * cfg.epsilon;
    double horizon = 0.0;
    for (double t : times) horizon = std::max(horizon, t - ic.time);
    double dt = cfg.dt;
    if (cfg.n_steps > 0 && horizon > 0.0) dt = horizon / cfg.n_steps;
    if (eps2 > 0.0 && dt > 1.0 / (2.0 * eps2)) {
        throw UnstableStep("ace_solve: dt exceeds the reaction stability bound 1/(2 eps^2)");
    }

    const int nx = ic.nx, ny = ic.ny;
    const std::size_t nky = static_cast<std::size_t>(ny) / 2 + 1;
    const auto lap_factor = [&](double h) {
        std::vector<double> fac(static_cast<std::size_t>(nx) * nky);
        for (int kx = 0; kx < nx; ++kx) {
            const int kxs = kx <= nx / 2 ? kx : kx - nx;
            const double wx = kTwoPi * kxs;
            for (std::size_t ky = 0; ky < nky; ++ky) {
                const double wy = kTwoPi * static_cast<double>(ky);
                fac[static_cast<std::size_t>(kx) * nky + ky] = std::exp(-(wx * wx + wy * wy) * h);
            }
        }
        return fac;
    };
    const auto diffuse = [&](std::vector<double>& u, const std::vector<double>& fac) {
        auto spec = fft::rfft2(u, nx, ny);
        for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= fac[i];
        u = fft::irfft2(std::move(spec), nx, ny);
    };
    const auto react = [&](double u) { return -eps2 * u * (u * u - 1.0); };

    std::vector<Field2D> out;
    out.reserve(times.size());
    Field2D cur = ic;
    for (double t : times) {
        const double span = t - cur.time;
        if (span < 0.0) throw std::invalid_argument("ace_solve: times must be nondecreasing");
        if (span > 0.0) {
            const int steps = std::max(1, static_cast<int>(std::ceil(span / dt)));
            const double h = span / steps;
            const auto fac_half = lap_factor(0.5 * h);
            for (int s = 0; s < steps; ++s) {
                diffuse(cur.values, fac_half);
                for (double& u : cur.values) {
                    const double k1 = react(u);
                    const double k2 = react(u + 0.5 * h * k1);
                    const double k3 = react(u + 0.5 * h * k2);
                    const double k4 = react(u + h * k3);
                    u += h / 6.0 * (k1 + 2.0 * (k2 + k3) + k4);
                }
                diffuse(cur.values, fac_half);
            }
            cur.time = t;
        }
        out.push_back(cur);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Residual checkers
// ---------------------------------------------------------------------------

double pde_residual(PdeKind kind, const std::function<double(double, double)>& u, double nu,
                    double t_lo, double t_hi, double x_lo, double x_hi,
                    double dt, double dx) {
    const int nt = std::max(1, static_cast<int>(std::round((t_hi - t_lo) / dt)));
    const int nx = std::max(1, static_cast<int>(std::round((x_hi - x_lo) / dx)));
    double worst = 0.0;
    for (int i = 0; i <= nt; ++i) {
        const double t = t_lo + i * dt;
        for (int j = 0; j <= nx; ++j) {
            const double x = x_lo + j * dx;
            const double ut = (u(t + dt, x) - u(t - dt, x)) / (2.0 * dt);
            const double uxx = (u(t, x + dx) - 2.0 * u(t, x) + u(t, x - dx)) / (dx * dx);
            double r;
            if (kind == PdeKind::heat) {
                r = ut - nu * uxx;
            } else {
                const double ux = (u(t, x + dx) - u(t, x - dx)) / (2.0 * dx);
                r = ut + u(t, x) * ux - nu * uxx;
            }
            worst = std::max(worst, std::abs(r));
        }
    }
    return worst;
}

double pde_residual(PdeKind kind, std::span<const Field1D> stack, double nu) {
    if (stack.size() < 3) throw std::invalid_argument("pde_residual: need at least 3 snapshots");
    const Field1D& f0 = stack[0];
    const double dt = stack[1].time - stack[0].time;
    for (std::size_t s = 1; s < stack.size(); ++s) {
        if (!same_grid(stack[s], f0)) throw GridMismatch("pde_residual: stack grids differ");
        if (std::abs((stack[s].time - stack[s - 1].time) - dt) > 1e-12 * std::max(1.0, std::abs(dt))) {
            throw std::invalid_argument("pde_residual: snapshots must be equally spaced in time");
        }
    }
    const int n = f0.n();
    const double dx = f0.dx;
    double worst = 0.0;
    for (std::size_t s = 1; s + 1 < stack.size(); ++s) {
        const auto& um = stack[s - 1].values;
        const auto& uc = stack[s].values;
        const auto& up = stack[s + 1].values;
        const int j_lo = f0.periodic ? 0 : 1;
        const int j_hi = f0.periodic ? n - 1 : n - 2;
        for (int j = j_lo; j <= j_hi; ++j) {
            const int jl = f0.periodic ? (j + n - 1) % n : j - 1;
            const int jr = f0.periodic ? (j + 1) % n : j + 1;
            const double ut = (up[j] - um[j]) / (2.0 * dt);
            const double uxx = (uc[jr] - 2.0 * uc[j] + uc[jl]) / (dx * dx);
            double r;
            if (kind == PdeKind::heat) {
                r = ut - nu * uxx;
            } else {
                const double ux = (uc[jr] - uc[jl]) / (2.0 * dx);
                r = ut + uc[j] * ux - nu * uxx;
            }
            worst = std::max(worst, std::abs(r));
        }
    }
    return worst;
}

} // namespace lielac
