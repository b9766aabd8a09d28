#pragma once

#include <complex>

#include "psalink/envelope.hpp"
#include "psalink/grid.hpp"

namespace psalink::modulation {

enum class ModulatorKind { standard_mzm, phase_modulator, linearized_first_order };

/// Two-tone RF drive shared by signal and idler. Both tones carry the same
/// per-tone power (standard two-tone-test convention); the drive depth is
/// zeta = pi * V_AC / V_pi with V_AC = sqrt(2 * R * P_tone).
struct ModulatorDrive {
    double vpi_v = 5.0;
    double bias_rad = 0.0;  // phi = pi * V_DC / V_pi
    double per_tone_rf_power_dbm = -300.0;
    double rf_load_ohm = 50.0;
    KiloHertz tone1_khz = 0;
    KiloHertz tone2_khz = 0;
    double phase1_rad = 0.0;
    double phase2_rad = 0.0;
    int truncation_order = 10;  // highest modulation order the grid must hold

    double v_ac() const;
    double zeta() const;
    void validate() const;
};

/// One CW optical line before modulation: offset from the pump carrier and
/// complex amplitude in sqrt(W).
struct CarrierTone {
    KiloHertz offset_khz = 0;
    std::complex<double> amplitude{0.0, 0.0};
};

/// Push-pull MZM output for a two-tone drive, evaluated in the closed
/// time-domain form amplitude * cos(phi + zeta * (cos w1 t + cos w2 t)).
/// Its Bessel expansion places tones only at carrier + m*w1 + n*w2.
ComplexEnvelope mzm_two_tone(const CarrierTone& carrier, const ModulatorDrive& drive,
                             const SimulationGrid& grid);

/// Pure phase modulation (V_DC = 0): unimodular multiplier
/// exp(i zeta (cos w1 t + cos w2 t)); output power equals input power.
ComplexEnvelope phase_mod_two_tone(const CarrierTone& carrier, const ModulatorDrive& drive,
                                   const SimulationGrid& grid);

/// Idealized linear intensity modulator: keeps the carrier and the four
/// first-order sidebands of an MZM output, zeroing every other modulation
/// order. Retained lines are bit-identical to the input lines; idempotent.
ComplexEnvelope linearize_first_order(const ComplexEnvelope& env, KiloHertz carrier_khz,
                                      KiloHertz tone1_khz, KiloHertz tone2_khz);

/// Composite fiber input: pump + modulated signal + modulated idler with a
/// controlled relative phase Theta = theta_s + theta_i - 2 theta_p.
struct LinkInputPlan {
    double pump_power_dbm = 0.0;
    double pump_phase_rad = 0.0;
    KiloHertz signal_offset_khz = 0;        // idler mirrored at -offset
    double combined_signal_idler_power_dbm = 0.0;  // total of both branches incl. sidebands
    double relative_phase_rad = 0.0;
    ModulatorDrive drive;
    ModulatorKind kind = ModulatorKind::standard_mzm;
};

ComplexEnvelope synthesize_link_input(const LinkInputPlan& plan, const SimulationGrid& grid);

/// Theta read back from the carrier bins of a composed field.
double measure_relative_phase(const Spectrum& spec, KiloHertz signal_offset_khz);

}  // namespace psalink::modulation
