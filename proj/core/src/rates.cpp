#include "mppm/rates.hpp"

#include <cmath>
#include <stdexcept>

#include "mppm/channel.hpp"

namespace mppm {

double poisson_pmf(int n, double mu) {
    if (n < 0) throw std::domain_error("poisson_pmf: n must be >= 0");
    if (mu < 0) throw std::domain_error("poisson_pmf: mu must be >= 0");
    if (mu == 0.0) return n == 0 ? 1.0 : 0.0;
    if (n <= 20) {
        double fact = 1.0;
        for (int k = 2; k <= n; ++k) fact *= k;
        return std::exp(-mu) * std::pow(mu, n) / fact;
    }
    return std::exp(-mu + n * std::log(mu) - std::lgamma(n + 1.0));
}

double yield_n(int n, const ProtocolParams& params) {
    const double eta = overall_transmittance(params);
    return 1.0 - (1.0 - 2.0 * params.dark_count) * std::pow(1.0 - eta, n);
}

double error_n(int n, const ProtocolParams& params) {
    const double eta = overall_transmittance(params);
    const double loss_n = std::pow(1.0 - eta, n);
    const double y = 1.0 - (1.0 - 2.0 * params.dark_count) * loss_n;
    if (y == 0.0) return params.misalignment;
    return (params.dark_count * loss_n + params.misalignment * (1.0 - loss_n)) / y;
}

double gain_q_mu(const ProtocolParams& params) {
    const double eta = overall_transmittance(params);
    return 1.0 - (1.0 - 2.0 * params.dark_count) * std::exp(-params.mu * eta);
}

double qber_e_mu(const ProtocolParams& params) {
    const double eta = overall_transmittance(params);
    return params.misalignment +
           (params.dark_count - params.misalignment) * std::exp(-params.mu * eta);
}

double e_src(const ProtocolParams& params) {
    double cdf = 0.0;
    for (int k = 0; k <= params.v_th; ++k) cdf += poisson_pmf(k, params.mu);
    double tail = 1.0 - cdf;
    return tail > 0.0 ? tail : 0.0;
}

double phase_error_ep(const ProtocolParams& params) {
    const double eta = overall_transmittance(params);
    const double mu_eta = params.mu * eta;
    if (mu_eta >= 1.0)
        throw std::domain_error("phase_error_ep: mu*eta must be < 1");
    const double q = gain_q_mu(params);
    const double src = e_src(params);
    if (src >= q) return 0.5;
    const double src_frac = src / q;
    const double collision =
        (1.0 - std::pow(1.0 - 2.0 / (params.train_length - 1.0), params.v_th)) / 4.0;
    double ep = src_frac + (1.0 - src_frac) * collision + mu_eta / (2.0 * (1.0 - mu_eta));
    if (ep < 0.0) ep = 0.0;
    if (ep > 0.5) ep = 0.5;
    return ep;
}

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("binary_entropy: x outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double linear_bound(double eta_end_to_end) {
    if (eta_end_to_end < 0.0 || eta_end_to_end >= 1.0)
        throw std::domain_error("linear_bound: eta must be in [0, 1)");
    return -std::log2(1.0 - eta_end_to_end);
}

RatePoint key_rate(const ProtocolParams& params) {
    RatePoint pt;
    pt.eta = overall_transmittance(params);
    pt.q_mu = gain_q_mu(params);
    pt.e_mu = qber_e_mu(params);
    pt.e_src = e_src(params);
    pt.e_p = phase_error_ep(params);
    const double cost_ec = params.ec_efficiency * binary_entropy(pt.e_mu);
    const double cost_pa = binary_entropy(pt.e_p);
    const double r = pt.q_mu / params.train_length * (1.0 - cost_ec - cost_pa);
    pt.rate = r > 0.0 ? r : 0.0;
    const double eta_fiber = std::pow(10.0, -params.alpha_db_per_km * params.distance_km / 10.0);
    pt.linear_bound = linear_bound(eta_fiber);
    return pt;
}

std::vector<double> default_mu_grid() {
    std::vector<double> grid;
    grid.reserve(200);
    const double lo = std::log10(1e-4), hi = std::log10(1.0);
    for (int i = 0; i < 200; ++i)
        grid.push_back(std::pow(10.0, lo + (hi - lo) * i / 199.0));
    return grid;
}

OptimizeResult optimize(const ProtocolParams& params,
                        const std::vector<double>& mu_grid,
                        int v_th_min, int v_th_max) {
    if (mu_grid.empty() || v_th_min > v_th_max)
        throw std::invalid_argument("optimize: empty search grid");
    const double eta = overall_transmittance(params);
    OptimizeResult best;
    best.mu = mu_grid.front();
    best.v_th = v_th_min;
    bool have = false;
    ProtocolParams p = params;
    for (int v = v_th_min; v <= v_th_max; ++v) {
        p.v_th = v;
        for (double mu : mu_grid) {
            if (mu * eta >= 1.0) continue;
            p.mu = mu;
            RatePoint pt = key_rate(p);
            const bool better =
                !have || pt.rate > best.point.rate ||
                (pt.rate == best.point.rate &&
                 (mu < best.mu || (mu == best.mu && v < best.v_th)));
            if (better) {
                best = OptimizeResult{mu, v, pt};
                have = true;
            }
        }
    }
    if (!have) {
        p.mu = best.mu;
        p.v_th = best.v_th;
        best.point = RatePoint{};
        best.point.eta = eta;
    }
    return best;
}

OptimizeResult optimized_rate(const ProtocolParams& params) {
    return optimize(params, default_mu_grid(), 1, 20);
}

}  // namespace mppm
