#pragma once

#include <cstdint>
#include <vector>

#include "mppm/train.hpp"

namespace mppm {

enum class MatchClass { MatchZero, MatchPi, NoMatch };
enum class DetectorClass { SAME, DIFF };

struct SiftResult {
    MatchClass match_class = MatchClass::NoMatch;
    DetectorClass detector_class = DetectorClass::SAME;
    std::uint8_t s_a = 0;  // valid only when match_class != NoMatch
    std::uint8_t s_b = 0;
};

// Classifies delta = phi_A^m + phi_B^n - phi_A^n - phi_B^m reduced to
// [0, 2pi): MatchZero at 0, MatchPi at pi, NoMatch otherwise. Equality is
// exact on the phase-slice grid (compared through a sub-grid tolerance).
MatchClass match_class(const TrainEncoding& alice, const TrainEncoding& bob, int m, int n);

// Applies the key-derivation table. s_A = kA_m ^ kA_n always;
// s_B = kB_m ^ kB_n, negated when (match, detector_class) is
// (MatchZero, DIFF) or (MatchPi, SAME). Throws std::logic_error on NoMatch.
SiftResult sift(MatchClass match, DetectorClass detector_class,
                std::uint8_t kA_m, std::uint8_t kA_n,
                std::uint8_t kB_m, std::uint8_t kB_n);

// The detector class the interference forces for the given bits:
// MatchZero maps |kA_m + kB_n - kA_n - kB_m| in {0,2} to SAME and 1 to
// DIFF; MatchPi inverts the mapping. Throws std::logic_error on NoMatch.
DetectorClass expected_detector_class(std::uint8_t kA_m, std::uint8_t kA_n,
                                      std::uint8_t kB_m, std::uint8_t kB_n,
                                      MatchClass match);

/// One bit assignment consistent with an announced detector class.
struct EveCandidate {
    std::uint8_t kA_m, kA_n, kB_m, kB_n;
    std::uint8_t s;  // the sifted bit both parties derive
};

// All bit assignments whose forced detector class equals the announced
// one. Always 8 of 16, split 4/4 in the sifted bit: the announcement
// leaks nothing about the key.
std::vector<EveCandidate> eve_ambiguity(DetectorClass detector_class, MatchClass match);

}  // namespace mppm
