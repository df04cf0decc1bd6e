#include "mppm/channel.hpp"

#include <cmath>

namespace mppm {

double overall_transmittance(const ProtocolParams& params) {
    const double arm_db = params.alpha_db_per_km * (params.distance_km / 2.0);
    return params.detector_efficiency * std::pow(10.0, -arm_db / 10.0);
}

ChannelRealization sample_realization(const ProtocolParams& params, std::mt19937_64& rng) {
    const double eta = overall_transmittance(params);
    const int L = params.train_length;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> bin(0, L - 1);

    ChannelRealization r;
    if (u(rng) < eta) r.alice_arrival_bin = bin(rng);
    if (u(rng) < eta) r.bob_arrival_bin = bin(rng);

    if (params.dark_count > 0.0) {
        for (int b = 0; b < L; ++b) {
            if (u(rng) < params.dark_count) r.dark_clicks.emplace_back(b, Detector::C);
            if (u(rng) < params.dark_count) r.dark_clicks.emplace_back(b, Detector::D);
        }
    }
    r.misaligned = u(rng) < params.misalignment;
    return r;
}

}  // namespace mppm
