#pragma once

#include <complex>
#include <vector>

#include "psalink/grid.hpp"

namespace psalink {

/// Sampled slowly-varying field A(z,T) referenced to the pump carrier.
/// |A|^2 is instantaneous optical power in watts. Treated as an immutable
/// value: every operation returns a new envelope.
struct ComplexEnvelope {
    SimulationGrid grid;
    std::vector<std::complex<double>> samples;  // units sqrt(W)
    double reference_frequency_hz = 0.0;        // absolute frequency of bin 0
    double z_position_m = 0.0;

    double total_power_w() const;  // mean |A|^2
};

/// Frequency-domain view with unitary-sum normalization: the coefficient of
/// an on-grid tone equals its complex amplitude in sqrt(W), so |bin|^2 is the
/// tone power and the bin powers sum to the time-domain mean power.
struct Spectrum {
    SimulationGrid grid;
    std::vector<std::complex<double>> bins;
    double reference_frequency_hz = 0.0;
    double z_position_m = 0.0;

    double total_power_w() const;  // sum |bin|^2

    std::complex<double> tone_coefficient(KiloHertz f) const;
    double tone_power_w(KiloHertz f) const;

    /// Sum of bin powers with offsets in [lo, hi] (inclusive, on-grid edges).
    double band_power_w(KiloHertz lo, KiloHertz hi) const;
};

ComplexEnvelope make_envelope(const SimulationGrid& grid);

Spectrum to_spectrum(const ComplexEnvelope& env);
ComplexEnvelope to_envelope(const Spectrum& spec);

/// Adds a CW tone at offset f (exact single bin in the spectrum domain).
void add_tone(ComplexEnvelope& env, KiloHertz f, std::complex<double> amplitude);

}  // namespace psalink
