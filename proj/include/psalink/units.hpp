#pragma once

#include <cmath>
#include <limits>
#include <numbers>

// Unit conversions and physical constants. Internally everything is SI:
// watts, meters, seconds, hertz, radians. dB/dBm appear only at the
// configuration and reporting boundaries.

namespace psalink {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0;        // m/s
inline constexpr double kElectronCharge = 1.602176634e-19;  // C

namespace units {

inline double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }

inline double watts_to_dbm(double watts) {
    if (watts <= 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(watts / 1e-3);
}

inline double db_to_ratio(double db) { return std::pow(10.0, db / 10.0); }

inline double ratio_to_db(double ratio) {
    if (ratio <= 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(ratio);
}

/// Attenuation quoted in dB/km to the natural power-decay coefficient in 1/m,
/// i.e. exp(-alpha*L) reproduces the dB figure.
inline double db_per_km_to_per_m(double db_per_km) {
    return std::numbers::ln10 * db_per_km / (10.0 * 1000.0);
}

inline double per_m_to_db_per_km(double alpha_per_m) {
    return alpha_per_m * 10.0 * 1000.0 / std::numbers::ln10;
}

}  // namespace units
}  // namespace psalink
