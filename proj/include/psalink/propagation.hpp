#pragma once

#include "psalink/envelope.hpp"
#include "psalink/fiber.hpp"
#include "psalink/grid.hpp"

namespace psalink::propagation {

struct StepConfig {
    int n_steps = 1000;
    double convergence_db = 0.01;   // gain tolerance for auto step-doubling
    int max_steps = 1 << 20;        // refinement ceiling for auto_converge
};

/// Phase a CW tone at offset w (rad/s from the carrier) accumulates relative
/// to the carrier over dz: (b2 w^2/2 + b3 w^3/6 + b4 w^4/24) dz. The overall
/// sign is tied to the frequency-transform orientation of FftPlan; the
/// analytic-gain oracle test pins the combination.
double dispersion_phase(const FiberParams& fiber, double omega_rad_s, double dz_m);

/// Solves the scalar NLSE over the fiber length with the symmetrized
/// split-step Fourier scheme: dispersion and attenuation in the frequency
/// domain, the Kerr multiplier exp(i gamma |A|^2 h) in the time domain from
/// the segment-midpoint field.
ComplexEnvelope ssfm_propagate(const ComplexEnvelope& env, const FiberParams& fiber,
                               const StepConfig& cfg);

struct ConvergedResult {
    ComplexEnvelope field;
    int n_steps_used = 0;
    double signal_gain_db = 0.0;
};

/// Re-propagates with doubled step counts until the extracted signal-carrier
/// gain moves by less than cfg.convergence_db between refinements. Throws
/// NonConvergenceError past cfg.max_steps.
ConvergedResult auto_converge(const ComplexEnvelope& env, const FiberParams& fiber,
                              const StepConfig& cfg, KiloHertz signal_offset_khz);

}  // namespace psalink::propagation
