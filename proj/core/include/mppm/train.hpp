#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mppm {

/// One party's encoding for a train of L pulses: a randomized phase
/// phi in [0, 2pi) and a key bit per pulse.
struct TrainEncoding {
    std::vector<double> phases;
    std::vector<std::uint8_t> bits;

    int length() const { return static_cast<int>(phases.size()); }
};

// Phases uniform on the M-slice grid {2*pi*j/M}, bits uniform on {0,1}.
// Deterministic for a given engine state. Throws ParamError on L < 2 or
// phase_slices < 2.
TrainEncoding random_train(int train_length, std::mt19937_64& rng, int phase_slices);

}  // namespace mppm
