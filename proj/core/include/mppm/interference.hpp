#pragma once

#include <random>

#include "mppm/train.hpp"

namespace mppm {

enum class Detector { C, D };

/// Charlie's two-click outcome: time stamps m < n with per-click detector labels.
struct DetectionEvent {
    int m = 0;
    int n = 0;
    Detector detector_m = Detector::C;
    Detector detector_n = Detector::C;
};

/// The four post-selected two-click probabilities. Always normalized:
/// p_cc + p_cd + p_dc + p_dd == 1 and p_cc == p_dd, p_cd == p_dc.
struct OutcomeDistribution {
    double p_cc;
    double p_cd;
    double p_dc;
    double p_dd;

    double same_class() const { return p_cc + p_dd; }
    double diff_class() const { return p_cd + p_dc; }
};

// Full modulated phase difference
//   (phi_A^m + k_A^m pi + phi_B^n + k_B^n pi) - (phi_A^n + k_A^n pi + phi_B^m + k_B^m pi)
// reduced to [0, 2pi). Throws std::out_of_range on bad indices or m == n.
double phase_delta(const TrainEncoding& alice, const TrainEncoding& bob, int m, int n);

// Probabilities proportional to (1+cos d, 1-cos d, 1-cos d, 1+cos d),
// normalized over the four retained outcomes. Rounding-induced negative
// weights are clamped to 0 before normalization.
OutcomeDistribution outcome_distribution(double delta);

// One draw of (detector_m, detector_n) with the distribution's probabilities.
std::pair<Detector, Detector> sample_outcome(const OutcomeDistribution& dist,
                                             std::mt19937_64& rng);

}  // namespace mppm
