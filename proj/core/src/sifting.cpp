#include "mppm/sifting.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mppm {

namespace {

// Phases live on a 2pi/M grid, so the reduced value is within double
// rounding of an exact grid point; 1e-9 rad is far below any usable slice
// width and far above accumulated rounding.
constexpr double kGridTol = 1e-9;

double reduce_2pi(double x) {
    const double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(x, two_pi);
    if (r < 0) r += two_pi;
    return r;
}

}  // namespace

MatchClass match_class(const TrainEncoding& alice, const TrainEncoding& bob, int m, int n) {
    const int L = alice.length();
    if (m < 0 || m >= L || n < 0 || n >= L || m == n || bob.length() != L)
        throw std::out_of_range("match_class: bad time stamps");
    const double d =
        reduce_2pi(alice.phases[m] + bob.phases[n] - alice.phases[n] - bob.phases[m]);
    const double two_pi = 2.0 * std::numbers::pi;
    if (d < kGridTol || two_pi - d < kGridTol) return MatchClass::MatchZero;
    if (std::abs(d - std::numbers::pi) < kGridTol) return MatchClass::MatchPi;
    return MatchClass::NoMatch;
}

SiftResult sift(MatchClass match, DetectorClass detector_class,
                std::uint8_t kA_m, std::uint8_t kA_n,
                std::uint8_t kB_m, std::uint8_t kB_n) {
    if (match == MatchClass::NoMatch)
        throw std::logic_error("sift: called on a NoMatch event");
    SiftResult r;
    r.match_class = match;
    r.detector_class = detector_class;
    r.s_a = kA_m ^ kA_n;
    const std::uint8_t b = kB_m ^ kB_n;
    const bool negate = (match == MatchClass::MatchZero)
                            ? detector_class == DetectorClass::DIFF
                            : detector_class == DetectorClass::SAME;
    r.s_b = negate ? static_cast<std::uint8_t>(1 - b) : b;
    return r;
}

DetectorClass expected_detector_class(std::uint8_t kA_m, std::uint8_t kA_n,
                                      std::uint8_t kB_m, std::uint8_t kB_n,
                                      MatchClass match) {
    if (match == MatchClass::NoMatch)
        throw std::logic_error("expected_detector_class: called on a NoMatch event");
    const int ksum = std::abs(int(kA_m) + int(kB_n) - int(kA_n) - int(kB_m));
    const bool same_at_zero = (ksum != 1);
    if (match == MatchClass::MatchZero)
        return same_at_zero ? DetectorClass::SAME : DetectorClass::DIFF;
    return same_at_zero ? DetectorClass::DIFF : DetectorClass::SAME;
}

std::vector<EveCandidate> eve_ambiguity(DetectorClass detector_class, MatchClass match) {
    std::vector<EveCandidate> out;
    for (int bits = 0; bits < 16; ++bits) {
        const std::uint8_t kA_m = (bits >> 3) & 1;
        const std::uint8_t kA_n = (bits >> 2) & 1;
        const std::uint8_t kB_m = (bits >> 1) & 1;
        const std::uint8_t kB_n = bits & 1;
        if (expected_detector_class(kA_m, kA_n, kB_m, kB_n, match) != detector_class)
            continue;
        const SiftResult s = sift(match, detector_class, kA_m, kA_n, kB_m, kB_n);
        out.push_back(EveCandidate{kA_m, kA_n, kB_m, kB_n, s.s_a});
    }
    return out;
}

}  // namespace mppm
