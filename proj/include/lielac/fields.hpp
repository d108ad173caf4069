#pragma once

#include "lielac/groups.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

namespace lielac {

// ---------------------------------------------------------------------------
// Discretized fields
// ---------------------------------------------------------------------------

/// Uniformly sampled 1D field. Node i sits at x_lo + i*dx. A periodic field
/// samples one full period [x_lo, x_lo + n*dx). The represented domain
/// [x_lo, x_lo + span] is carried as metadata so that group transforms move
/// it affinely; it does not switch definition with the periodic flag.
struct Field1D {
    double x_lo = 0.0;
    double dx = 0.0;
    double span = 0.0;
    std::vector<double> values;
    double time = 0.0;
    bool periodic = false;

    int n() const { return static_cast<int>(values.size()); }
    double x(int i) const { return x_lo + i * dx; }
    /// Domain length (one full period for periodic fields).
    double extent() const { return span; }
    double x_hi() const { return x_lo + span; }

    /// Uniform field over [x_lo, x_lo + length); spacing length/n when
    /// periodic, length/(n-1) otherwise.
    static Field1D uniform(double x_lo, double length, int n, bool periodic, double time = 0.0);

    /// Linear interpolation; periodic fields wrap, others clamp to the range.
    double value_at(double x) const;

    double mean() const;
    double max_abs() const;
};

/// 2D field on the unit square [0,1)^2 with nx*ny cell-left nodes
/// (ix/nx, iy/ny); stored row-major with ix the slow index.
struct Field2D {
    int nx = 0;
    int ny = 0;
    std::vector<double> values;
    double time = 0.0;
    bool periodic = true;

    double& at(int ix, int iy) { return values[static_cast<std::size_t>(ix) * ny + iy]; }
    double at(int ix, int iy) const { return values[static_cast<std::size_t>(ix) * ny + iy]; }
    double x(int ix) const { return static_cast<double>(ix) / nx; }
    double y(int iy) const { return static_cast<double>(iy) / ny; }

    static Field2D zeros(int nx, int ny, double time = 0.0);

    /// Bilinear interpolation with periodic wrap.
    double value_at(double x, double y) const;
};

/// Componentwise extrema of the jet (u, x, t) of a field.
struct JetBounds {
    double u_min = 0.0, u_max = 0.0;
    double x_min = 0.0, x_max = 0.0;
    double t_min = 0.0, t_max = 0.0;
};

/// Bounding window of the evaluation points (x_f, t_f), carried as the four
/// corner points of the original query rectangle. Group transforms map the
/// corners exactly; because every (composite) group map is monotone in x and
/// t separately, the extrema of the transformed region always sit at these
/// corners, so the extents below stay exact under arbitrarily many transforms.
struct QueryWindow {
    std::array<double, 4> ct{0.0, 0.0, 0.0, 0.0};
    std::array<double, 4> cx{0.0, 0.0, 0.0, 0.0};

    QueryWindow() = default;
    QueryWindow(double xf_lo, double xf_hi, double tf_lo, double tf_hi)
        : ct{tf_lo, tf_lo, tf_hi, tf_hi}, cx{xf_lo, xf_hi, xf_lo, xf_hi} {}

    double xf_lo() const { return std::min({cx[0], cx[1], cx[2], cx[3]}); }
    double xf_hi() const { return std::max({cx[0], cx[1], cx[2], cx[3]}); }
    double tf_lo() const { return std::min({ct[0], ct[1], ct[2], ct[3]}); }
    double tf_hi() const { return std::max({ct[0], ct[1], ct[2], ct[3]}); }
};

// ---------------------------------------------------------------------------
// Group actions on whole initial conditions
// ---------------------------------------------------------------------------

/// Transforms a 1D field by a heat-group element: the node scatter is mapped
/// pointwise by the closed-form action (affine in x at fixed t, hence the
/// output is again uniform and no interpolation loss occurs), sorted if the
/// orientation flips, and the time stamp becomes t~. The periodic flag
/// survives only for gamma = 0 and lambda1 = 0 (x-affine maps with an
/// x-independent u-factor).
/// Throws SingularTransform / DegenerateDomain.
Field1D transform_ic_heat(const HeatGroupElement& g, double nu, const Field1D& f);

/// Burgers analogue; periodic flag survives for gamma = 0.
Field1D transform_ic_burgers(const BurgersGroupElement& g, const Field1D& f);

/// SE(2)+time action on a periodic 2D field. Quarter turns about the domain
/// center combined with translations that are integer multiples of the grid
/// spacing act as exact index permutations; anything else is resampled
/// bilinearly with periodic wrap.
Field2D transform_ic_ace(const Se2Element& g, double t_shift, const Field2D& f);

/// Forward image of a query window under the base-space action shared by the
/// heat and Burgers groups. Requires the window's time span to stay on one
/// side of the projective singularity.
QueryWindow transform_window(const Sl2Matrix& a, double lambda1, double lambda0,
                             const QueryWindow& w);

/// Extrema of (values, spatial domain, time) of a field.
JetBounds jet_bounds(const Field1D& f);
JetBounds jet_bounds(const Field1D& f, const QueryWindow& q);

// ---------------------------------------------------------------------------
// Initial-condition generators
// ---------------------------------------------------------------------------

/// u0(x) = sum_k amps[k] * sin(2*pi*freqs[k]*x/L + phases[k]) on [0, L).
struct SineICParams {
    int K = 1;
    std::vector<double> amps{1.0};
    std::vector<double> freqs{2.0};
    std::vector<double> phases{0.0};
    double L = 6.283185307179586476925286766559;
};

Field1D gen_sine_ic(const SineICParams& p, int n);

/// Gaussian random field on the periodic unit interval, sampled spectrally:
/// per-mode std scale * ((2*pi*k)^2 + shift^2)^(-power/2), zero mode removed,
/// then mean_offset added (the sample mean equals mean_offset exactly).
struct GrfParams {
    double scale = 25.0;
    double shift = 5.0;
    int power = 4;
    double mean_offset = 0.0;
};

Field1D gen_grf_ic(const GrfParams& p, int n, std::uint64_t seed);

/// u0(x,y) = sum_{i,j=1..K} a[i][j] (i^2+j^2)^{-r} sin(pi i {x-x0}) sin(pi j {y-y0})
/// with {.} the sawtooth (fractional part). Zero shifts give a field that
/// vanishes on the x=0 and y=0 node lines.
struct AceIcParams {
    int K = 16;
    double r = 0.85;
    std::vector<double> a_coeffs;       // K*K row-major, entries in [-1, 1]
    double x0_shift = 0.0;
    double y0_shift = 0.0;

    /// Draws K in [16,32], r in [0.7,1.0], a_ij in [-1,1]; shifts stay zero.
    static AceIcParams random(std::uint64_t seed);
};

Field2D gen_ace_ic(const AceIcParams& p, int n);

/// Fields share a grid when x_lo, dx, size and periodicity agree.
bool same_grid(const Field1D& a, const Field1D& b, double tol = 1e-12);

} // namespace lielac
