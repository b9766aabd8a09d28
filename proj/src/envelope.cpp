#include "psalink/envelope.hpp"

#include <algorithm>

#include "psalink/errors.hpp"
#include "psalink/fft.hpp"
#include "psalink/units.hpp"

namespace psalink {

double ComplexEnvelope::total_power_w() const {
    double sum = 0.0;
    for (const auto& a : samples) sum += std::norm(a);
    return sum / static_cast<double>(samples.size());
}

double Spectrum::total_power_w() const {
    double sum = 0.0;
    for (const auto& c : bins) sum += std::norm(c);
    return sum;
}

std::complex<double> Spectrum::tone_coefficient(KiloHertz f) const {
    return bins[static_cast<std::size_t>(grid.bin_of(f))];
}

double Spectrum::tone_power_w(KiloHertz f) const { return std::norm(tone_coefficient(f)); }

double Spectrum::band_power_w(KiloHertz lo, KiloHertz hi) const {
    if (lo > hi) throw ConfigError("band_power_w: empty band");
    double sum = 0.0;
    for (int k = 0; k < grid.n_samples; ++k) {
        const KiloHertz f = grid.bin_frequency_khz(k);
        if (f >= lo && f <= hi) sum += std::norm(bins[static_cast<std::size_t>(k)]);
    }
    return sum;
}

ComplexEnvelope make_envelope(const SimulationGrid& grid) {
    ComplexEnvelope env;
    env.grid = grid;
    env.samples.assign(static_cast<std::size_t>(grid.n_samples), {0.0, 0.0});
    return env;
}

Spectrum to_spectrum(const ComplexEnvelope& env) {
    const int n = env.grid.n_samples;
    FftPlan plan(n);
    std::copy(env.samples.begin(), env.samples.end(), plan.buffer());
    plan.to_spectrum();
    Spectrum spec;
    spec.grid = env.grid;
    spec.reference_frequency_hz = env.reference_frequency_hz;
    spec.z_position_m = env.z_position_m;
    spec.bins.resize(static_cast<std::size_t>(n));
    const double scale = 1.0 / static_cast<double>(n);
    for (int k = 0; k < n; ++k) spec.bins[static_cast<std::size_t>(k)] = plan.buffer()[k] * scale;
    return spec;
}

ComplexEnvelope to_envelope(const Spectrum& spec) {
    const int n = spec.grid.n_samples;
    FftPlan plan(n);
    std::copy(spec.bins.begin(), spec.bins.end(), plan.buffer());
    plan.to_time();
    ComplexEnvelope env;
    env.grid = spec.grid;
    env.reference_frequency_hz = spec.reference_frequency_hz;
    env.z_position_m = spec.z_position_m;
    env.samples.assign(plan.buffer(), plan.buffer() + n);
    return env;
}

void add_tone(ComplexEnvelope& env, KiloHertz f, std::complex<double> amplitude) {
    const std::int64_t bin = env.grid.bin_of(f);  // validates the on-grid condition
    const std::int64_t n = env.grid.n_samples;
    // exp(-2 pi i k t/T) sampled on-grid; reduce k*i mod n in integer
    // arithmetic so the phase never suffers large-argument loss.
    for (std::int64_t i = 0; i < n; ++i) {
        const double phase = -kTwoPi * static_cast<double>((bin * i) % n) / static_cast<double>(n);
        env.samples[static_cast<std::size_t>(i)] +=
            amplitude * std::complex<double>(std::cos(phase), std::sin(phase));
    }
}

}  // namespace psalink
