#pragma once

#include "psalink/fiber.hpp"

namespace psalink::analytics {

/// 3-wave degenerate-pump PSA working point. kappa and g^2 are always
/// derived from the stored primaries.
struct ThreeWaveParams {
    double pump_power_w = 0.0;
    double gamma_per_w_m = 0.0;
    double length_m = 0.0;
    double delta_beta_per_m = 0.0;  // linear phase mismatch
    double theta_rad = 0.0;         // relative phase theta_s + theta_i - 2 theta_p

    double kappa_per_m() const { return 2.0 * gamma_per_w_m * pump_power_w + delta_beta_per_m; }
    double g_squared() const {
        const double gp = gamma_per_w_m * pump_power_w;
        const double half_kappa = kappa_per_m() / 2.0;
        return gp * gp - half_kappa * half_kappa;
    }
};

/// Linear phase mismatch between pump, signal and idler spaced +-delta_omega
/// about the pump: beta2*dw^2 + beta4*dw^4/12. The beta3 contribution cancels
/// by the signal/idler symmetry.
double delta_beta(const FiberParams& fiber, double delta_omega_rad_s);

/// Third-order dispersion from the dispersion slope S at the ZDW (where the
/// dispersion parameter D vanishes): beta3 = (lambda^2 / 2 pi c)^2 * S.
double beta3_from_slope(double slope_s_per_m3, double lambda_m);

/// Closed-form phase-sensitive power gain of signal and idler (lossless,
/// non-depleted pump; equal input signal/idler powers). Continuous across
/// g^2 = 0: hyperbolic for g^2 > 0, trigonometric for g^2 < 0, with the
/// series limit at g -> 0.
double psa_gain(const ThreeWaveParams& p);

struct ThetaOptimum {
    double theta_max_rad = 0.0;
    double gain_max = 1.0;
    double theta_min_rad = 0.0;
    double gain_min = 1.0;
    bool flat = false;  // degenerate case gamma*P*L = 0: gain independent of theta
};

/// Locates the gain extrema over theta. The gain is an exact sinusoid in
/// theta (c0 + c1 cos + c2 sin), so the optimum has a closed form.
ThetaOptimum theta_opt(const ThreeWaveParams& p_without_theta);

enum class ModulationFormat { am, pm };

/// Phase of the first-order modulation sidebands relative to the carrier
/// (m = +-1): AM gives -pi +- varphi, PM gives pi/2 +- varphi.
double sideband_phase(ModulationFormat format, int order, double varphi_rad);

/// Relative phase of the (1,-1) sideband pair given the carrier-pair phase:
/// AM maps theta00 -> theta00 - 2 pi (same gain), PM maps to theta00 + pi
/// (de-amplified when the carriers are at maximum gain).
double relative_phase_relation(ModulationFormat format, double theta00_rad);

}  // namespace psalink::analytics
