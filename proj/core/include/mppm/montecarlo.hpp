#pragma once

#include <cstdint>
#include <optional>

#include "mppm/channel.hpp"
#include "mppm/sifting.hpp"

namespace mppm {

/// Aggregated counters over a batch of simulated train pairs.
struct TrialStats {
    std::uint64_t trains = 0;
    std::uint64_t success_detections = 0;  // events with two announced clicks
    std::uint64_t matched = 0;             // survived phase matching
    std::uint64_t sift_errors = 0;         // matched events with s_a != s_b

    double empirical_gain() const {
        return trains ? static_cast<double>(success_detections) / trains : 0.0;
    }
    double empirical_qber() const {
        return matched ? static_cast<double>(sift_errors) / matched : 0.0;
    }
    double match_fraction() const {
        return success_detections
                   ? static_cast<double>(matched) / success_detections
                   : 0.0;
    }
};

struct TrialOutcome {
    SiftResult sift;
    bool agree = false;  // s_a == s_b
};

// One full train pair: encode, channel, interference, two-click
// post-selection, phase matching, sifting. Empty when the trial is
// discarded at any stage (no success detection or NoMatch).
std::optional<TrialOutcome> run_trial(const ProtocolParams& params, std::mt19937_64& rng);

// Aggregates run_trial over independently seeded substreams; bit-identical
// for a fixed (seed, trials) regardless of scheduling.
TrialStats run_batch(const ProtocolParams& params, std::uint64_t trials, std::uint64_t seed);

// 2/M: the chance the grid-valued phase difference lands on 0 or pi.
// Throws ParamError when M is odd (pi is off the grid).
double match_fraction_expected(int phase_slices);

}  // namespace mppm
