#include "fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace lielac::fft {

namespace {
// The FFTW planner is not thread-safe; plan creation/destruction is
// serialized. Execution on distinct plans is safe.
std::mutex planner_mutex;
} // namespace

std::vector<std::complex<double>> rfft(const std::vector<double>& in) {
    const int n = static_cast<int>(in.size());
    std::vector<double> buf(in);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n) / 2 + 1);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        plan = fftw_plan_dft_r2c_1d(n, buf.data(),
                                    reinterpret_cast<fftw_complex*>(out.data()),
                                    FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}

std::vector<double> irfft(std::vector<std::complex<double>> spec, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        plan = fftw_plan_dft_c2r_1d(n, reinterpret_cast<fftw_complex*>(spec.data()),
                                    out.data(), FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(plan);
    }
    const double scale = 1.0 / n;
    for (double& v : out) v *= scale;
    return out;
}

std::vector<std::complex<double>> rfft2(const std::vector<double>& in, int nx, int ny) {
    std::vector<double> buf(in);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(nx) * (ny / 2 + 1));
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        plan = fftw_plan_dft_r2c_2d(nx, ny, buf.data(),
                                    reinterpret_cast<fftw_complex*>(out.data()),
                                    FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}

std::vector<double> irfft2(std::vector<std::complex<double>> spec, int nx, int ny) {
    std::vector<double> out(static_cast<std::size_t>(nx) * ny);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        plan = fftw_plan_dft_c2r_2d(nx, ny, reinterpret_cast<fftw_complex*>(spec.data()),
                                    out.data(), FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex);
        fftw_destroy_plan(plan);
    }
    const double scale = 1.0 / (static_cast<double>(nx) * ny);
    for (double& v : out) v *= scale;
    return out;
}

} // namespace lielac::fft
