#include "psalink/modulation.hpp"

#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "psalink/errors.hpp"
#include "psalink/units.hpp"

namespace psalink::modulation {

double ModulatorDrive::v_ac() const {
    return std::sqrt(2.0 * rf_load_ohm * units::dbm_to_watts(per_tone_rf_power_dbm));
}

double ModulatorDrive::zeta() const { return kPi * v_ac() / vpi_v; }

void ModulatorDrive::validate() const {
    if (vpi_v <= 0.0) throw ConfigError("modulator V_pi must be positive");
    if (rf_load_ohm <= 0.0) throw ConfigError("modulator RF load must be positive");
    if (tone1_khz <= 0 || tone2_khz <= 0) throw ConfigError("modulation tones must be positive");
    if (tone1_khz == tone2_khz) throw ConfigError("modulation tones must be distinct");
    if (truncation_order < 1) throw ConfigError("truncation order must be >= 1");
}

namespace {

void check_bandwidth(const CarrierTone& carrier, const ModulatorDrive& drive,
                     const SimulationGrid& grid) {
    const KiloHertz reach = std::abs(carrier.offset_khz) +
                            drive.truncation_order * std::max(drive.tone1_khz, drive.tone2_khz);
    if (static_cast<double>(reach) * 1e3 > grid.nyquist_hz())
        throw ConfigError("sideband order " + std::to_string(drive.truncation_order) +
                          " reaches " + std::to_string(reach) +
                          " kHz, beyond the grid Nyquist offset");
}

// Drive waveform cos(w1 t + phi1) + cos(w2 t + phi2) and the carrier phasor
// exp(-i w_c t), all with the tone phase reduced in integer arithmetic so
// on-grid periodicity is exact.
struct ToneSampler {
    std::int64_t n;
    std::int64_t k1, k2, kc;
    double phi1, phi2;

    double drive_at(std::int64_t i) const {
        const double t1 = kTwoPi * static_cast<double>((k1 * i) % n) / static_cast<double>(n);
        const double t2 = kTwoPi * static_cast<double>((k2 * i) % n) / static_cast<double>(n);
        return std::cos(t1 + phi1) + std::cos(t2 + phi2);
    }

    std::complex<double> carrier_at(std::int64_t i) const {
        const double p = -kTwoPi * static_cast<double>((kc * i) % n) / static_cast<double>(n);
        return {std::cos(p), std::sin(p)};
    }
};

ToneSampler make_sampler(const CarrierTone& carrier, const ModulatorDrive& drive,
                         const SimulationGrid& grid) {
    ToneSampler s;
    s.n = grid.n_samples;
    s.k1 = grid.bin_of(drive.tone1_khz);
    s.k2 = grid.bin_of(drive.tone2_khz);
    s.kc = grid.bin_of(carrier.offset_khz);
    s.phi1 = drive.phase1_rad;
    s.phi2 = drive.phase2_rad;
    return s;
}

}  // namespace

ComplexEnvelope mzm_two_tone(const CarrierTone& carrier, const ModulatorDrive& drive,
                             const SimulationGrid& grid) {
    drive.validate();
    check_bandwidth(carrier, drive, grid);
    const ToneSampler s = make_sampler(carrier, drive, grid);
    const double zeta = drive.zeta();
    ComplexEnvelope env = make_envelope(grid);
    for (std::int64_t i = 0; i < s.n; ++i) {
        const double transfer = std::cos(drive.bias_rad + zeta * s.drive_at(i));
        env.samples[static_cast<std::size_t>(i)] = carrier.amplitude * s.carrier_at(i) * transfer;
    }
    return env;
}

ComplexEnvelope phase_mod_two_tone(const CarrierTone& carrier, const ModulatorDrive& drive,
                                   const SimulationGrid& grid) {
    drive.validate();
    check_bandwidth(carrier, drive, grid);
    const ToneSampler s = make_sampler(carrier, drive, grid);
    const double zeta = drive.zeta();
    ComplexEnvelope env = make_envelope(grid);
    for (std::int64_t i = 0; i < s.n; ++i) {
        const double phase = zeta * s.drive_at(i);
        env.samples[static_cast<std::size_t>(i)] =
            carrier.amplitude * s.carrier_at(i) * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return env;
}

ComplexEnvelope linearize_first_order(const ComplexEnvelope& env, KiloHertz carrier_khz,
                                      KiloHertz tone1_khz, KiloHertz tone2_khz) {
    Spectrum spec = to_spectrum(env);
    Spectrum kept;
    kept.grid = spec.grid;
    kept.reference_frequency_hz = spec.reference_frequency_hz;
    kept.z_position_m = spec.z_position_m;
    kept.bins.assign(spec.bins.size(), {0.0, 0.0});
    for (KiloHertz f : {carrier_khz, carrier_khz + tone1_khz, carrier_khz - tone1_khz,
                        carrier_khz + tone2_khz, carrier_khz - tone2_khz}) {
        const auto bin = static_cast<std::size_t>(spec.grid.bin_of(f));
        kept.bins[bin] = spec.bins[bin];
    }
    return to_envelope(kept);
}

namespace {

ComplexEnvelope modulate_branch(const CarrierTone& carrier, const LinkInputPlan& plan,
                                const SimulationGrid& grid) {
    switch (plan.kind) {
        case ModulatorKind::standard_mzm:
            return mzm_two_tone(carrier, plan.drive, grid);
        case ModulatorKind::phase_modulator:
            return phase_mod_two_tone(carrier, plan.drive, grid);
        case ModulatorKind::linearized_first_order: {
            ComplexEnvelope env = mzm_two_tone(carrier, plan.drive, grid);
            return linearize_first_order(env, carrier.offset_khz, plan.drive.tone1_khz,
                                         plan.drive.tone2_khz);
        }
    }
    throw ConfigError("unknown modulator kind");
}

// Every planned spectral line as an exact bin index; duplicates mean two
// lines landed on one bin.
void check_tone_collisions(const LinkInputPlan& plan, const SimulationGrid& grid) {
    std::set<std::int64_t> bins;
    auto insert_or_throw = [&](KiloHertz f, const std::string& what) {
        if (!bins.insert(f / grid.df_khz).second)
            throw ConfigError("tone collision: " + what + " at " + std::to_string(f) +
                              " kHz lands on an already occupied bin");
    };
    insert_or_throw(0, "pump");
    const int order = plan.kind == ModulatorKind::linearized_first_order
                          ? 1
                          : plan.drive.truncation_order;
    for (const KiloHertz base : {plan.signal_offset_khz, -plan.signal_offset_khz}) {
        for (int m = -order; m <= order; ++m) {
            for (int n = -order; n <= order; ++n) {
                if (std::abs(m) + std::abs(n) > order) continue;
                insert_or_throw(base + m * plan.drive.tone1_khz + n * plan.drive.tone2_khz,
                                "modulation line (" + std::to_string(m) + "," + std::to_string(n) +
                                    ") of carrier " + std::to_string(base) + " kHz");
            }
        }
    }
}

}  // namespace

ComplexEnvelope synthesize_link_input(const LinkInputPlan& plan, const SimulationGrid& grid) {
    plan.drive.validate();
    if (plan.signal_offset_khz <= 0) throw ConfigError("signal offset must be positive");
    check_tone_collisions(plan, grid);

    const double theta_p = plan.pump_phase_rad;
    const double theta_si = plan.relative_phase_rad / 2.0 + theta_p;
    const std::complex<double> unit_carrier{std::cos(theta_si), std::sin(theta_si)};

    ComplexEnvelope signal =
        modulate_branch({plan.signal_offset_khz, unit_carrier}, plan, grid);
    ComplexEnvelope idler =
        modulate_branch({-plan.signal_offset_khz, unit_carrier}, plan, grid);

    const double unit_power = signal.total_power_w() + idler.total_power_w();
    const double target_w = units::dbm_to_watts(plan.combined_signal_idler_power_dbm);
    const double scale = std::sqrt(target_w / unit_power);

    ComplexEnvelope out = make_envelope(grid);
    const double pump_w = units::dbm_to_watts(plan.pump_power_dbm);
    const std::complex<double> pump_amp =
        std::sqrt(pump_w) * std::complex<double>(std::cos(theta_p), std::sin(theta_p));
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        out.samples[i] = scale * (signal.samples[i] + idler.samples[i]) + pump_amp;
    return out;
}

double measure_relative_phase(const Spectrum& spec, KiloHertz signal_offset_khz) {
    const double theta_s = std::arg(spec.tone_coefficient(signal_offset_khz));
    const double theta_i = std::arg(spec.tone_coefficient(-signal_offset_khz));
    const double theta_p = std::arg(spec.tone_coefficient(0));
    return std::remainder(theta_s + theta_i - 2.0 * theta_p, kTwoPi);
}

}  // namespace psalink::modulation
