#include "psalink/propagation.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "psalink/errors.hpp"
#include "psalink/fft.hpp"
#include "psalink/units.hpp"

namespace psalink::propagation {

double dispersion_phase(const FiberParams& fiber, double omega_rad_s, double dz_m) {
    const double w = omega_rad_s;
    const double w2 = w * w;
    return (fiber.beta2_s2_per_m * w2 / 2.0 + fiber.beta3_s3_per_m * w2 * w / 6.0 +
            fiber.beta4_s4_per_m * w2 * w2 / 24.0) *
           dz_m;
}

namespace {

// Frequency-domain multiplier for one linear step of length dz: dispersion
// phase plus half the power attenuation, with the 1/n FFT normalization
// folded in so each round trip comes back to scale.
std::vector<std::complex<double>> linear_step_multiplier(const FiberParams& fiber,
                                                         const SimulationGrid& grid, double dz_m) {
    const int n = grid.n_samples;
    std::vector<std::complex<double>> mult(static_cast<std::size_t>(n));
    const double amplitude = std::exp(-0.5 * fiber.alpha_per_m * dz_m) / static_cast<double>(n);
    for (int k = 0; k < n; ++k) {
        const double omega = kTwoPi * grid.bin_frequency_hz(k);
        const double phase = dispersion_phase(fiber, omega, dz_m);
        mult[static_cast<std::size_t>(k)] =
            amplitude * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return mult;
}

void check_finite(const std::complex<double>* samples, int n, int step_index) {
    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(samples[i].real()) || !std::isfinite(samples[i].imag()))
            throw NumericError("non-finite sample detected at split step " +
                               std::to_string(step_index));
    }
}

}  // namespace

ComplexEnvelope ssfm_propagate(const ComplexEnvelope& env, const FiberParams& fiber,
                               const StepConfig& cfg) {
    fiber.validate();
    if (cfg.n_steps < 1) throw ConfigError("n_steps must be >= 1");
    const int n = env.grid.n_samples;
    const int steps = cfg.n_steps;
    const double h = fiber.length_m / static_cast<double>(steps);
    const double gamma_h = fiber.gamma_per_w_m * h;

    const auto half = linear_step_multiplier(fiber, env.grid, h / 2.0);
    const auto full = linear_step_multiplier(fiber, env.grid, h);

    FftPlan plan(n);
    std::complex<double>* a = plan.buffer();
    std::copy(env.samples.begin(), env.samples.end(), a);
    check_finite(a, n, 0);

    // Strang layout D(h/2) [N(h) D(h)]^(steps-1) N(h) D(h/2): interior
    // half-steps merged pairwise into full linear steps.
    for (int step = 0; step < steps; ++step) {
        const auto& mult = step == 0 ? half : full;
        plan.to_spectrum();
        for (int k = 0; k < n; ++k) a[k] *= mult[static_cast<std::size_t>(k)];
        plan.to_time();
        for (int k = 0; k < n; ++k) {
            double s, c;
            ::sincos(gamma_h * std::norm(a[k]), &s, &c);
            a[k] *= std::complex<double>(c, s);
        }
        if ((step & 63) == 63) check_finite(a, n, step + 1);
    }
    plan.to_spectrum();
    for (int k = 0; k < n; ++k) a[k] *= half[static_cast<std::size_t>(k)];
    plan.to_time();
    check_finite(a, n, steps);

    ComplexEnvelope out;
    out.grid = env.grid;
    out.reference_frequency_hz = env.reference_frequency_hz;
    out.z_position_m = env.z_position_m + fiber.length_m;
    out.samples.assign(a, a + n);
    return out;
}

ConvergedResult auto_converge(const ComplexEnvelope& env, const FiberParams& fiber,
                              const StepConfig& cfg, KiloHertz signal_offset_khz) {
    const double input_power = to_spectrum(env).tone_power_w(signal_offset_khz);
    if (input_power <= 0.0)
        throw ConfigError("auto_converge: no power at the signal offset " +
                          std::to_string(signal_offset_khz) + " kHz");

    StepConfig run = cfg;
    ComplexEnvelope field = ssfm_propagate(env, fiber, run);
    double gain_db =
        units::ratio_to_db(to_spectrum(field).tone_power_w(signal_offset_khz) / input_power);

    while (true) {
        if (run.n_steps * 2 > cfg.max_steps)
            throw NonConvergenceError(
                "signal gain not stable to " + std::to_string(cfg.convergence_db) + " dB within " +
                std::to_string(cfg.max_steps) + " steps (last delta at n=" +
                std::to_string(run.n_steps) + ")");
        run.n_steps *= 2;
        ComplexEnvelope refined = ssfm_propagate(env, fiber, run);
        const double refined_gain_db =
            units::ratio_to_db(to_spectrum(refined).tone_power_w(signal_offset_khz) / input_power);
        const double delta = std::abs(refined_gain_db - gain_db);
        field = std::move(refined);
        gain_db = refined_gain_db;
        if (delta < cfg.convergence_db) break;
    }
    return {std::move(field), run.n_steps, gain_db};
}

}  // namespace psalink::propagation
