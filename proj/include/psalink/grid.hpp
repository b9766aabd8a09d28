#pragma once

#include <cstdint>
#include <vector>

namespace psalink {

/// Tone frequencies are configured as exact integer multiples of 1 kHz so
/// that the on-grid condition can be checked with integer arithmetic. All
/// simulated tones must land exactly on a grid bin: a leakage-free spectrum
/// is what makes single-bin tone extraction valid.
using KiloHertz = std::int64_t;

inline constexpr KiloHertz kKiloHertzPerGigaHertz = 1'000'000;

/// Uniform time/frequency sampling lattice shared by every envelope in a run.
///
/// n_samples is a power of two (>= 2^12). Bin spacing df divides every
/// configured tone exactly; the time window is 1/df and the sample rate
/// n_samples * df. Bins are indexed FFT-style: bin k holds offset k*df for
/// k <= n/2, and (k - n)*df above.
struct SimulationGrid {
    int n_samples = 0;
    KiloHertz df_khz = 0;

    double df_hz() const { return static_cast<double>(df_khz) * 1e3; }
    double sample_rate_hz() const { return static_cast<double>(n_samples) * df_hz(); }
    double time_window_s() const { return 1.0 / df_hz(); }
    double dt_s() const { return time_window_s() / static_cast<double>(n_samples); }
    double nyquist_hz() const { return 0.5 * sample_rate_hz(); }

    bool is_on_grid(KiloHertz f) const { return df_khz > 0 && f % df_khz == 0; }

    /// Signed offset frequency -> FFT bin index. Throws ConfigError when the
    /// frequency is off-grid or beyond Nyquist.
    int bin_of(KiloHertz f) const;

    /// Signed offset frequency carried by a bin (negative above n/2).
    KiloHertz bin_frequency_khz(int bin) const;
    double bin_frequency_hz(int bin) const { return static_cast<double>(bin_frequency_khz(bin)) * 1e3; }

    bool operator==(const SimulationGrid&) const = default;
};

struct GridRequest {
    std::vector<KiloHertz> tones;     // every configured tone / carrier offset
    double min_sample_rate_hz = 0.0;  // >= 2x the largest retained offset
    int min_n_samples = 1 << 12;
    int max_n_samples = 1 << 24;
};

/// Chooses df as the gcd of all tones and the smallest power-of-two sample
/// count covering the requested bandwidth. Throws ConfigError naming the
/// offending tone when no feasible grid exists under max_n_samples.
SimulationGrid build_grid(const GridRequest& request);

}  // namespace psalink
