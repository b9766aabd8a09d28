#include "psalink/detection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "psalink/errors.hpp"
#include "psalink/fft.hpp"
#include "psalink/units.hpp"

namespace psalink::detection {

Spectrum band_filter(const Spectrum& spec, KiloHertz lo_khz, KiloHertz hi_khz) {
    if (lo_khz >= hi_khz) throw ConfigError("band_filter: empty band");
    if (!spec.grid.is_on_grid(std::abs(lo_khz)) || !spec.grid.is_on_grid(std::abs(hi_khz)))
        throw ConfigError("band_filter: band edges must lie on the frequency grid");
    Spectrum out = spec;
    for (int k = 0; k < out.grid.n_samples; ++k) {
        const KiloHertz f = out.grid.bin_frequency_khz(k);
        if (f < lo_khz || f > hi_khz) out.bins[static_cast<std::size_t>(k)] = {0.0, 0.0};
    }
    return out;
}

ComplexEnvelope band_filter(const ComplexEnvelope& env, KiloHertz lo_khz, KiloHertz hi_khz) {
    return to_envelope(band_filter(to_spectrum(env), lo_khz, hi_khz));
}

ComplexEnvelope apply_loss(const ComplexEnvelope& env, double loss_db) {
    if (loss_db < 0.0) throw ConfigError("loss must be >= 0 dB");
    const double amplitude = std::pow(10.0, -loss_db / 20.0);
    ComplexEnvelope out = env;
    for (auto& a : out.samples) a *= amplitude;
    return out;
}

std::vector<double> photodetect(const ComplexEnvelope& env, const DetectorParams& det) {
    std::vector<double> current(env.samples.size());
    for (std::size_t i = 0; i < env.samples.size(); ++i)
        current[i] = det.sensitivity_a_per_w * std::norm(env.samples[i]);
    return current;
}

double RfSpectrum::tone_dbm(KiloHertz f) const {
    if (f < 0) throw ConfigError("rf tone frequency must be >= 0");
    const int k = grid.bin_of(f);
    return power_dbm[static_cast<std::size_t>(k)];
}

RfSpectrum rf_spectrum(const std::vector<double>& current_a, const SimulationGrid& grid,
                       double rf_load_ohm) {
    const int n = grid.n_samples;
    FftPlan plan(n);
    for (int i = 0; i < n; ++i) plan.buffer()[i] = {current_a[static_cast<std::size_t>(i)], 0.0};
    plan.to_spectrum();
    const double scale = 1.0 / static_cast<double>(n);

    RfSpectrum rf;
    rf.grid = grid;
    rf.power_dbm.resize(static_cast<std::size_t>(n / 2 + 1));
    for (int k = 0; k <= n / 2; ++k) {
        // One-sided: fold the -f coefficient into +f. DC and Nyquist have no
        // mirror partner.
        double p = std::norm(plan.buffer()[k] * scale);
        if (k != 0 && k != n / 2) p += std::norm(plan.buffer()[n - k] * scale);
        p *= rf_load_ohm;
        rf.power_dbm[static_cast<std::size_t>(k)] =
            p > 0.0 ? std::max(units::watts_to_dbm(p), kBelowFloorDbm) : kBelowFloorDbm;
    }
    return rf;
}

namespace {

double optical_tone_dbm(const Spectrum& spec, KiloHertz f) {
    return std::max(units::watts_to_dbm(spec.tone_power_w(f)), kBelowFloorDbm);
}

}  // namespace

ToneReport extract_tones(const RfSpectrum& rf, const Spectrum& optical, const TwoTonePlan& tones,
                         double dc_current_a) {
    const KiloHertz t1 = tones.tone1_khz;
    const KiloHertz t2 = tones.tone2_khz;
    const KiloHertz imd3_high = 2 * t1 - t2;  // with tone1 > tone2
    const KiloHertz imd3_low = 2 * t2 - t1;
    for (KiloHertz f : {t1, t2, imd3_high, imd3_low}) {
        if (!rf.grid.is_on_grid(std::abs(f)))
            throw ConfigError("tone extraction target " + std::to_string(f) +
                              " kHz is off-grid; refusing to interpolate");
    }

    ToneReport rep;
    rep.dc_current_a = dc_current_a;
    rep.fund_rf_dbm_tone1 = rf.tone_dbm(t1);
    rep.fund_rf_dbm_tone2 = rf.tone_dbm(t2);
    rep.imd3_rf_dbm_high = rf.tone_dbm(imd3_high);
    rep.imd3_rf_dbm_low = rf.tone_dbm(imd3_low);

    const KiloHertz s = tones.signal_offset_khz;
    auto& opt = rep.optical_dbm;
    opt["pump"] = optical_tone_dbm(optical, 0);
    opt["signal"] = optical_tone_dbm(optical, s);
    opt["idler"] = optical_tone_dbm(optical, -s);
    opt["fund_lower"] = optical_tone_dbm(optical, s - t1);
    opt["fund_upper"] = optical_tone_dbm(optical, s + t1);
    opt["imd3_lower"] = optical_tone_dbm(optical, s - imd3_high);
    opt["imd3_upper"] = optical_tone_dbm(optical, s + imd3_high);
    // Aggregates used for the per-tone optical gains: both first-order
    // sidebands of tone1, and both IMD3 lines flanking them.
    opt["fundamental"] = units::watts_to_dbm(optical.tone_power_w(s - t1) +
                                             optical.tone_power_w(s + t1));
    opt["imd3"] = std::max(units::watts_to_dbm(optical.tone_power_w(s - imd3_high) +
                                               optical.tone_power_w(s + imd3_high)),
                           kBelowFloorDbm);
    return rep;
}

double shot_noise_floor_dbm_hz(double dc_current_a, double rf_load_ohm) {
    if (dc_current_a < 0.0) throw ConfigError("dc current must be >= 0");
    return units::watts_to_dbm(2.0 * kElectronCharge * dc_current_a * rf_load_ohm);
}

namespace {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

LineFit free_fit(const std::vector<SfdrSweepPoint>& pts, int count, bool imd3) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < count; ++i) {
        const double x = pts[static_cast<std::size_t>(i)].input_rf_dbm;
        const double y = imd3 ? pts[static_cast<std::size_t>(i)].imd3_dbm
                              : pts[static_cast<std::size_t>(i)].fundamental_dbm;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(count);
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw FittingError("degenerate sweep: all input powers identical");
    LineFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

double fixed_slope_intercept(const std::vector<SfdrSweepPoint>& pts, int count, double slope,
                             bool imd3) {
    double sum = 0.0;
    for (int i = 0; i < count; ++i) {
        const double x = pts[static_cast<std::size_t>(i)].input_rf_dbm;
        const double y = imd3 ? pts[static_cast<std::size_t>(i)].imd3_dbm
                              : pts[static_cast<std::size_t>(i)].fundamental_dbm;
        sum += y - slope * x;
    }
    return sum / static_cast<double>(count);
}

}  // namespace

SfdrReport compute_sfdr(const std::vector<SfdrSweepPoint>& sweep, double noise_floor_dbm_hz) {
    if (sweep.size() < 4)
        throw FittingError("SFDR fit needs at least 4 sweep points, got " +
                           std::to_string(sweep.size()));
    std::vector<SfdrSweepPoint> pts = sweep;
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.input_rf_dbm < b.input_rf_dbm; });

    // Largest low-power window whose free-fit slopes sit within +-0.1 of the
    // ideal 1 and 3; saturation at the high end breaks the criterion first.
    int window = 0;
    LineFit fund{}, imd3{};
    for (int count = static_cast<int>(pts.size()); count >= 4; --count) {
        fund = free_fit(pts, count, false);
        imd3 = free_fit(pts, count, true);
        if (std::abs(fund.slope - 1.0) <= 0.1 && std::abs(imd3.slope - 3.0) <= 0.1) {
            window = count;
            break;
        }
    }
    if (window == 0) {
        const LineFit f4 = free_fit(pts, 4, false);
        const LineFit i4 = free_fit(pts, 4, true);
        throw FittingError("no small-signal window with slopes near 1 and 3; lowest-power fits "
                           "gave fundamental slope " +
                           std::to_string(f4.slope) + " and IMD3 slope " + std::to_string(i4.slope));
    }

    SfdrReport rep;
    rep.noise_floor_dbm_hz = noise_floor_dbm_hz;
    rep.measured_fund_slope = fund.slope;
    rep.measured_imd3_slope = imd3.slope;
    rep.window_points = window;
    rep.fund_slope = 1.0;
    rep.imd3_slope = 3.0;
    rep.fund_intercept_dbm = fixed_slope_intercept(pts, window, 1.0, false);
    rep.imd3_intercept_dbm = fixed_slope_intercept(pts, window, 3.0, true);
    // Intersection of out = x + b1 and out = 3x + b3.
    const double x_star = (rep.fund_intercept_dbm - rep.imd3_intercept_dbm) / 2.0;
    rep.oip3_dbm = x_star + rep.fund_intercept_dbm;
    rep.sfdr_db = (2.0 / 3.0) * (rep.oip3_dbm - noise_floor_dbm_hz);
    return rep;
}

}  // namespace psalink::detection
