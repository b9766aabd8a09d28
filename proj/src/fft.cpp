#include "psalink/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace psalink {

namespace {
// The FFTW planner is not thread-safe; executing existing plans is.
std::mutex planner_mutex;
}  // namespace

FftPlan::FftPlan(int n) : n_(n) {
    std::lock_guard<std::mutex> lock(planner_mutex);
    buffer_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(n));
    auto* raw = reinterpret_cast<fftw_complex*>(buffer_);
    // FFTW_BACKWARD carries exp(-i w t) components into positive bins,
    // matching the envelope sign convention.
    plan_to_spectrum_ = fftw_plan_dft_1d(n, raw, raw, FFTW_BACKWARD, FFTW_ESTIMATE);
    plan_to_time_ = fftw_plan_dft_1d(n, raw, raw, FFTW_FORWARD, FFTW_ESTIMATE);
}

FftPlan::~FftPlan() {
    std::lock_guard<std::mutex> lock(planner_mutex);
    fftw_destroy_plan(static_cast<fftw_plan>(plan_to_spectrum_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_to_time_));
    fftw_free(buffer_);
}

void FftPlan::to_spectrum() { fftw_execute(static_cast<fftw_plan>(plan_to_spectrum_)); }

void FftPlan::to_time() { fftw_execute(static_cast<fftw_plan>(plan_to_time_)); }

}  // namespace psalink
