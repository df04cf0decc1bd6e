#pragma once

#include <vector>

#include "mppm/params.hpp"

namespace mppm {

/// One closed-form evaluation of the key-rate pipeline.
struct RatePoint {
    double eta = 0.0;           // per-arm transmittance incl. detector efficiency
    double q_mu = 0.0;          // gain
    double e_mu = 0.0;          // QBER
    double e_src = 0.0;         // P(n > v_th)
    double e_p = 0.0;           // phase error rate, clamped to [0, 1/2]
    double rate = 0.0;          // secret key rate per pulse, clamped at 0
    double linear_bound = 0.0;  // repeaterless baseline at this distance
};

// e^(-mu) mu^n / n!, in log space for large n.
double poisson_pmf(int n, double mu);

// Y_n = 1 - (1 - 2 Y0)(1 - eta)^n
double yield_n(int n, const ProtocolParams& params);

// e_n = [Y0 (1-eta)^n + e_d (1 - (1-eta)^n)] / Y_n; e_d when Y_n == 0.
double error_n(int n, const ProtocolParams& params);

// Q_mu = 1 - (1 - 2 p_d) e^(-mu eta)
double gain_q_mu(const ProtocolParams& params);

// E_mu = e_d + (p_d - e_d) e^(-mu eta)
double qber_e_mu(const ProtocolParams& params);

// P(n > v_th) under Poisson(mu).
double e_src(const ProtocolParams& params);

// e_p = e_src/Q + (1 - e_src/Q) [1 - (1 - 2/(L-1))^v_th] / 4
//       + mu eta / (2 (1 - mu eta)), clamped to [0, 1/2].
// Returns 1/2 outright when e_src >= Q. Throws std::domain_error when
// mu eta >= 1.
double phase_error_ep(const ProtocolParams& params);

// H(x) = -x log2 x - (1-x) log2(1-x); H(0) = H(1) = 0.
// Throws std::domain_error outside [0,1].
double binary_entropy(double x);

// R = (1/L) [Q - Q f H(E) - Q H(e_p)], clamped at 0, with all
// intermediates reported.
RatePoint key_rate(const ProtocolParams& params);

// -log2(1 - eta_end_to_end): the linear rate-loss baseline, taken in the
// end-to-end fiber transmittance (eta/eta_B)^2 of the composed arms.
double linear_bound(double eta_end_to_end);

struct OptimizeResult {
    double mu = 0.0;
    int v_th = 0;
    RatePoint point;
};

// Exhaustive grid search maximizing R; ties break toward smaller mu then
// smaller v_th. Grid points where mu*eta >= 1 are skipped.
OptimizeResult optimize(const ProtocolParams& params,
                        const std::vector<double>& mu_grid,
                        int v_th_min, int v_th_max);

// Log-spaced mu over [1e-4, 1], 200 points.
std::vector<double> default_mu_grid();

// Full pipeline at the params' distance with optimized mu, v_th.
OptimizeResult optimized_rate(const ProtocolParams& params);

}  // namespace mppm
