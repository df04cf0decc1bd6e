#include "mppm/train.hpp"

#include <numbers>

#include "mppm/params.hpp"

namespace mppm {

TrainEncoding random_train(int train_length, std::mt19937_64& rng, int phase_slices) {
    if (train_length < 2) throw ParamError("random_train: train_length must be >= 2");
    if (phase_slices < 2) throw ParamError("random_train: phase_slices must be >= 2");

    std::uniform_int_distribution<int> slice(0, phase_slices - 1);
    std::uniform_int_distribution<int> bit(0, 1);
    const double step = 2.0 * std::numbers::pi / phase_slices;

    TrainEncoding t;
    t.phases.reserve(train_length);
    t.bits.reserve(train_length);
    for (int i = 0; i < train_length; ++i) {
        t.phases.push_back(slice(rng) * step);
        t.bits.push_back(static_cast<std::uint8_t>(bit(rng)));
    }
    return t;
}

}  // namespace mppm
