#pragma once

#include <optional>
#include <random>
#include <vector>

#include "mppm/interference.hpp"
#include "mppm/params.hpp"

namespace mppm {

/// Sampled per-train channel state for one Monte Carlo trial.
struct ChannelRealization {
    std::optional<int> alice_arrival_bin;  // absent when the photon is lost
    std::optional<int> bob_arrival_bin;
    std::vector<std::pair<int, Detector>> dark_clicks;
    bool misaligned = false;  // flip this train's SAME/DIFF outcome
};

// eta = eta_B * 10^(-alpha * (d/2) / 10); each photon crosses half the
// total distance to Charlie at the midpoint.
double overall_transmittance(const ProtocolParams& params);

// Single-photon mode: each party's photon occupies a uniform bin and
// survives with probability eta; every detector at every bin dark-clicks
// with probability dark_count; misaligned with probability e_d.
ChannelRealization sample_realization(const ProtocolParams& params, std::mt19937_64& rng);

}  // namespace mppm
