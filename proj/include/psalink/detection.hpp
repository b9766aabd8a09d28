#pragma once

#include <map>
#include <string>
#include <vector>

#include "psalink/envelope.hpp"
#include "psalink/grid.hpp"

namespace psalink::detection {

/// Any tone weaker than this is reported as below the numerical floor.
inline constexpr double kPowerFloorDbm = -300.0;
/// Finite stand-in for log of an exactly zero power.
inline constexpr double kBelowFloorDbm = -400.0;

struct DetectorParams {
    double sensitivity_a_per_w = 1.0;
    double rf_load_ohm = 50.0;
    double post_fiber_loss_db = 0.0;
};

/// Ideal rectangular filter: bins with offsets inside [lo, hi] kept
/// bit-exactly, everything else zeroed.
Spectrum band_filter(const Spectrum& spec, KiloHertz lo_khz, KiloHertz hi_khz);
ComplexEnvelope band_filter(const ComplexEnvelope& env, KiloHertz lo_khz, KiloHertz hi_khz);

ComplexEnvelope apply_loss(const ComplexEnvelope& env, double loss_db);

/// Square-law detection: I(t) = s |A(t)|^2, in amperes.
std::vector<double> photodetect(const ComplexEnvelope& env, const DetectorParams& det);

/// One-sided electrical power spectrum of a photocurrent, single-bin tone
/// convention: P(f) collects the +-f coefficients, so a sinusoid of amplitude
/// I1 reads I1^2 R/2 in its bin.
struct RfSpectrum {
    SimulationGrid grid;
    std::vector<double> power_dbm;  // index k <-> frequency k * df, k = 0 .. n/2

    double tone_dbm(KiloHertz f) const;
};

RfSpectrum rf_spectrum(const std::vector<double>& current_a, const SimulationGrid& grid,
                       double rf_load_ohm);

/// RF fundamental / IMD3 tone powers plus the named optical lines they
/// originate from, read from the pre-detection optical spectrum.
struct ToneReport {
    double fund_rf_dbm_tone1 = kBelowFloorDbm;  // at tone1
    double fund_rf_dbm_tone2 = kBelowFloorDbm;  // at tone2
    double imd3_rf_dbm_low = kBelowFloorDbm;    // at 2*tone2 - tone1
    double imd3_rf_dbm_high = kBelowFloorDbm;   // at 2*tone1 - tone2
    std::map<std::string, double> optical_dbm;
    double dc_current_a = 0.0;
};

struct TwoTonePlan {
    KiloHertz tone1_khz = 0;
    KiloHertz tone2_khz = 0;
    KiloHertz signal_offset_khz = 0;
};

ToneReport extract_tones(const RfSpectrum& rf, const Spectrum& optical, const TwoTonePlan& tones,
                         double dc_current_a);

/// Semi-classical shot-noise density 2 q I R, as dBm/Hz. Returns -infinity
/// for zero current.
double shot_noise_floor_dbm_hz(double dc_current_a, double rf_load_ohm);

struct SfdrSweepPoint {
    double input_rf_dbm = 0.0;
    double fundamental_dbm = 0.0;
    double imd3_dbm = 0.0;
};

struct SfdrReport {
    double noise_floor_dbm_hz = 0.0;
    double fund_slope = 1.0;               // fixed by construction
    double fund_intercept_dbm = 0.0;       // at 0 dBm input
    double imd3_slope = 3.0;               // fixed by construction
    double imd3_intercept_dbm = 0.0;
    double measured_fund_slope = 0.0;      // free fit inside the window
    double measured_imd3_slope = 0.0;
    int window_points = 0;
    double oip3_dbm = 0.0;
    double sfdr_db = 0.0;                  // for 1 Hz bandwidth
};

/// Fits fixed-slope 1 and 3 lines over the largest low-power window whose
/// free-fit slopes stay within +-0.1 of 1 and 3, then
/// SFDR = (2/3) (OIP3 - floor). Throws FittingError when no window exists.
SfdrReport compute_sfdr(const std::vector<SfdrSweepPoint>& sweep, double noise_floor_dbm_hz);

}  // namespace psalink::detection
