#pragma once

#include <complex>
#include <vector>

namespace lielac::fft {

/// Real-to-complex FFT, unnormalized, size n/2+1 output.
std::vector<std::complex<double>> rfft(const std::vector<double>& in);

/// Inverse of rfft with 1/n normalization applied.
std::vector<double> irfft(std::vector<std::complex<double>> spec, int n);

/// 2D real-to-complex FFT of an nx*ny row-major array (ny the fast index);
/// output shape nx * (ny/2+1).
std::vector<std::complex<double>> rfft2(const std::vector<double>& in, int nx, int ny);

std::vector<double> irfft2(std::vector<std::complex<double>> spec, int nx, int ny);

} // namespace lielac::fft
