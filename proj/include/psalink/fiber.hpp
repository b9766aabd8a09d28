#pragma once

namespace psalink {

/// HNLF physical constants. Dispersion orders are the Taylor derivatives of
/// the propagation constant at the pump carrier; alpha is the natural power
/// attenuation coefficient (exp(-alpha*L) is the transmitted power fraction).
struct FiberParams {
    double length_m = 0.0;
    double gamma_per_w_m = 0.0;    // nonlinear coefficient
    double alpha_per_m = 0.0;      // power attenuation
    double beta2_s2_per_m = 0.0;   // GVD at the pump (0 when pumped at the ZDW)
    double beta3_s3_per_m = 0.0;
    double beta4_s4_per_m = 0.0;
    double zdw_m = 0.0;            // zero-dispersion wavelength
    double dispersion_slope_s_per_m3 = 0.0;

    void validate() const;
};

}  // namespace psalink
