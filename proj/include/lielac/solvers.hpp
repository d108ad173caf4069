#pragma once

#include "lielac/fields.hpp"

#include <functional>
#include <span>
#include <vector>

namespace lielac {

struct HeatConfig {
    double nu = 0.1;
    int n_modes = 0; // 0 = keep all resolvable modes
};

struct AceConfig {
    double epsilon = 5.0; // reaction coefficient; the PDE carries epsilon^2
    double dt = 1e-3;
    int n_steps = 0;      // if > 0, overrides dt as horizon / n_steps
};

/// Exact Fourier-mode decay e^{-nu k^2 (t - t0)} on the periodic domain.
/// Mass (the zero mode) is conserved exactly. Requested times must not
/// precede the field's time stamp.
std::vector<Field1D> heat_spectral_solve(const Field1D& ic, const HeatConfig& cfg,
                                         std::span<const double> times);

/// Viscous Burgers via the Cole-Hopf transform: u = -2 nu w_x / w with w a
/// heat solution, evolved spectrally on an internally refined grid. Requires
/// a periodic, zero-mean initial condition (throws NonZeroMean above
/// mean_tol); a residual mean below the tolerance is carried as an exact
/// Galilean offset on the output values.
std::vector<Field1D> burgers_solve(const Field1D& ic, double nu, std::span<const double> times,
                                   double mean_tol = 1e-6, int refine = 4);

/// Independent pseudo-spectral reference: integrating-factor RK4 with 2/3
/// dealiasing on a refine-times finer grid, sampled back to the input grid.
std::vector<Field1D> burgers_reference_rk4(const Field1D& ic, double nu,
                                           std::span<const double> times,
                                           int refine = 4, double dt_target = 2.5e-4);

/// Allen-Cahn u_t = lap(u) - eps^2 u (u^2 - 1) by Strang splitting: exact
/// spectral diffusion half-steps around an RK4 reaction step. Fixed points
/// u = -1, 0, 1 are preserved. Throws UnstableStep when dt > 1/(2 eps^2).
std::vector<Field2D> ace_solve(const Field2D& ic, const AceConfig& cfg,
                               std::span<const double> times);

enum class PdeKind { heat, burgers };

/// Max central-difference residual |u_t + D_x[u]| of a callable u(t, x) over
/// the closed grid [t0, t1] x [x0, x1] with spacings dt, dx.
double pde_residual(PdeKind kind, const std::function<double(double, double)>& u, double nu,
                    double t_lo, double t_hi, double x_lo, double x_hi,
                    double dt, double dx);

/// Same check on a stack of equally time-spaced fields sharing one grid
/// (interior nodes only for non-periodic fields).
double pde_residual(PdeKind kind, std::span<const Field1D> stack, double nu);

} // namespace lielac
