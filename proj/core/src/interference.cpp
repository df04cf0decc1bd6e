#include "mppm/interference.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mppm {

namespace {

double reduce_2pi(double x) {
    const double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(x, two_pi);
    if (r < 0) r += two_pi;
    if (r >= two_pi) r = 0.0;  // fmod can round up to two_pi
    return r;
}

void check_indices(const TrainEncoding& t, int m, int n) {
    const int L = t.length();
    if (m < 0 || m >= L || n < 0 || n >= L)
        throw std::out_of_range("time stamp outside [0, L)");
    if (m == n) throw std::out_of_range("time stamps must be distinct");
}

}  // namespace

double phase_delta(const TrainEncoding& alice, const TrainEncoding& bob, int m, int n) {
    check_indices(alice, m, n);
    check_indices(bob, m, n);
    const double pi = std::numbers::pi;
    double d = (alice.phases[m] + alice.bits[m] * pi + bob.phases[n] + bob.bits[n] * pi) -
               (alice.phases[n] + alice.bits[n] * pi + bob.phases[m] + bob.bits[m] * pi);
    return reduce_2pi(d);
}

OutcomeDistribution outcome_distribution(double delta) {
    const double c = std::cos(delta);
    double same = 1.0 + c;
    double diff = 1.0 - c;
    if (same < 0) same = 0.0;
    if (diff < 0) diff = 0.0;
    const double norm = 2.0 * (same + diff);
    return OutcomeDistribution{same / norm, diff / norm, diff / norm, same / norm};
}

std::pair<Detector, Detector> sample_outcome(const OutcomeDistribution& dist,
                                             std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double x = u(rng);
    if (x < dist.p_cc) return {Detector::C, Detector::C};
    if (x < dist.p_cc + dist.p_cd) return {Detector::C, Detector::D};
    if (x < dist.p_cc + dist.p_cd + dist.p_dc) return {Detector::D, Detector::C};
    return {Detector::D, Detector::D};
}

}  // namespace mppm
