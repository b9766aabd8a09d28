#include "psalink/analytics.hpp"

#include <cmath>

#include "psalink/errors.hpp"
#include "psalink/units.hpp"

namespace psalink {

void FiberParams::validate() const {
    if (length_m < 0.0) throw ConfigError("fiber length must be >= 0");
    if (gamma_per_w_m < 0.0) throw ConfigError("fiber gamma must be >= 0");
    if (alpha_per_m < 0.0) throw ConfigError("fiber alpha must be >= 0");
}

}  // namespace psalink

namespace psalink::analytics {

namespace {

// sinh(sqrt(u))^2 / u extended to u < 0 (-> sin^2(sqrt(-u)) / -u ... i.e.
// sin(sqrt(|u|))^2 / |u|) and to u = 0 by its power series. Everything in
// psa_gain is expressed through this and sinhc below so the g^2 = 0
// boundary is crossed smoothly.
double sinh_sq_over(double u) {
    const double a = std::sqrt(std::abs(u));
    if (a < 1e-4) return 1.0 + u / 3.0 + 2.0 * u * u / 45.0;
    if (u > 0.0) {
        const double s = std::sinh(a);
        return s * s / u;
    }
    const double s = std::sin(a);
    return s * s / (-u);
}

// sinh(sqrt(v)) / sqrt(v), continued as sin for v < 0.
double sinhc(double v) {
    const double a = std::sqrt(std::abs(v));
    if (a < 1e-4) return 1.0 + v / 6.0 + v * v / 120.0;
    if (v > 0.0) return std::sinh(a) / a;
    return std::sin(a) / a;
}

}  // namespace

double delta_beta(const FiberParams& fiber, double delta_omega_rad_s) {
    const double w2 = delta_omega_rad_s * delta_omega_rad_s;
    return fiber.beta2_s2_per_m * w2 + fiber.beta4_s4_per_m * w2 * w2 / 12.0;
}

double beta3_from_slope(double slope_s_per_m3, double lambda_m) {
    if (slope_s_per_m3 < 0.0) throw ConfigError("dispersion slope must be >= 0");
    if (lambda_m <= 0.0) throw ConfigError("wavelength must be positive");
    const double factor = lambda_m * lambda_m / (kTwoPi * kSpeedOfLight);
    return factor * factor * slope_s_per_m3;
}

double psa_gain(const ThreeWaveParams& p) {
    const double gp = p.gamma_per_w_m * p.pump_power_w;
    const double kappa = p.kappa_per_m();
    const double half_kappa_sq = (kappa / 2.0) * (kappa / 2.0);
    const double L = p.length_m;
    const double u = (gp * gp - half_kappa_sq) * L * L;  // (gL)^2, sign carries the branch

    // G = 1 + (1 + X/(4g^2)) sinh^2(gL) + (gp/g) sin(theta) sinh(2gL), with
    // X/4 = kappa^2/4 + gp^2 + kappa gp cos(theta). Grouping the two sinh^2
    // contributions as (u + X/4 L^2) * f keeps the P = 0 and L = 0
    // identities exact: the bracket cancels to zero in both cases.
    const double x_quarter = half_kappa_sq + gp * gp + kappa * gp * std::cos(p.theta_rad);
    const double f = sinh_sq_over(u);
    return 1.0 + (u + x_quarter * L * L) * f +
           2.0 * gp * L * std::sin(p.theta_rad) * sinhc(4.0 * u);
}

ThetaOptimum theta_opt(const ThreeWaveParams& p_without_theta) {
    const ThreeWaveParams& p = p_without_theta;
    const double gp = p.gamma_per_w_m * p.pump_power_w;
    const double kappa = p.kappa_per_m();
    const double half_kappa_sq = (kappa / 2.0) * (kappa / 2.0);
    const double L = p.length_m;
    const double u = (gp * gp - half_kappa_sq) * L * L;
    const double f = sinh_sq_over(u);

    // G(theta) = c0 + c1 cos(theta) + c2 sin(theta)
    const double c0 = 1.0 + (u + (half_kappa_sq + gp * gp) * L * L) * f;
    const double c1 = kappa * gp * L * L * f;
    const double c2 = 2.0 * gp * L * sinhc(4.0 * u);

    ThetaOptimum out;
    const double amp = std::hypot(c1, c2);
    if (amp == 0.0) {
        out.flat = true;
        out.theta_max_rad = 0.0;
        out.theta_min_rad = 0.0;
        out.gain_max = c0;
        out.gain_min = c0;
        return out;
    }
    out.theta_max_rad = std::atan2(c2, c1);
    out.theta_min_rad = out.theta_max_rad > 0.0 ? out.theta_max_rad - kPi : out.theta_max_rad + kPi;
    out.gain_max = c0 + amp;
    out.gain_min = c0 - amp;
    return out;
}

double sideband_phase(ModulationFormat format, int order, double varphi_rad) {
    if (order != 1 && order != -1)
        throw ConfigError("sideband_phase: only first-order sidebands are tabulated");
    const double m = static_cast<double>(order);
    if (format == ModulationFormat::am) return -kPi + m * varphi_rad;
    return kPi / 2.0 + m * varphi_rad;
}

double relative_phase_relation(ModulationFormat format, double theta00_rad) {
    if (format == ModulationFormat::am) return theta00_rad - kTwoPi;
    return theta00_rad + kPi;
}

}  // namespace psalink::analytics
