#pragma once

#include <complex>
#include <memory>

namespace psalink {

/// In-place complex FFT working on an internal FFTW-aligned buffer.
///
/// Orientation convention: a tone at positive offset +f appears in the time
/// domain as exp(-i 2 pi f t) and lands in bin +k after to_spectrum(). No
/// normalization is applied here; to_spectrum followed by to_time multiplies
/// by n. Plans are created with FFTW_ESTIMATE so results are reproducible
/// run to run. Instances are not thread-safe; use one per thread.
class FftPlan {
public:
    explicit FftPlan(int n);
    ~FftPlan();
    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;

    int size() const { return n_; }
    std::complex<double>* buffer() { return buffer_; }
    const std::complex<double>* buffer() const { return buffer_; }

    void to_spectrum();  // time -> frequency (unnormalized)
    void to_time();      // frequency -> time (unnormalized)

private:
    int n_;
    std::complex<double>* buffer_;
    void* plan_to_spectrum_;
    void* plan_to_time_;
};

}  // namespace psalink
