#include "mppm/montecarlo.hpp"

#include <algorithm>

#include "mppm/interference.hpp"

namespace mppm {

double match_fraction_expected(int phase_slices) {
    if (phase_slices < 2 || phase_slices % 2 != 0)
        throw ParamError("match_fraction_expected: phase_slices must be even and >= 2");
    return 2.0 / phase_slices;
}

namespace {

struct Click {
    int bin;
    Detector detector;
};

}  // namespace

std::optional<TrialOutcome> run_trial(const ProtocolParams& params, std::mt19937_64& rng) {
    const TrainEncoding alice = random_train(params.train_length, rng, params.phase_slices);
    const TrainEncoding bob = random_train(params.train_length, rng, params.phase_slices);
    const ChannelRealization ch = sample_realization(params, rng);

    std::vector<Click> clicks;
    std::uniform_int_distribution<int> coin(0, 1);
    auto random_detector = [&] { return coin(rng) ? Detector::D : Detector::C; };

    if (ch.alice_arrival_bin && ch.bob_arrival_bin &&
        *ch.alice_arrival_bin != *ch.bob_arrival_bin) {
        const int m = *ch.alice_arrival_bin;
        const int n = *ch.bob_arrival_bin;
        auto [det_m, det_n] =
            sample_outcome(outcome_distribution(phase_delta(alice, bob, m, n)), rng);
        if (ch.misaligned)  // flips SAME <-> DIFF
            det_n = det_n == Detector::C ? Detector::D : Detector::C;
        clicks.push_back({m, det_m});
        clicks.push_back({n, det_n});
    } else if (ch.alice_arrival_bin && ch.bob_arrival_bin) {
        // Same bin: the pair bunches into one detector, a single time stamp.
        clicks.push_back({*ch.alice_arrival_bin, random_detector()});
    } else if (ch.alice_arrival_bin) {
        clicks.push_back({*ch.alice_arrival_bin, random_detector()});
    } else if (ch.bob_arrival_bin) {
        clicks.push_back({*ch.bob_arrival_bin, random_detector()});
    }

    for (const auto& [bin, det] : ch.dark_clicks) {
        const bool dup = std::any_of(clicks.begin(), clicks.end(), [&](const Click& c) {
            return c.bin == bin && c.detector == det;
        });
        if (!dup) clicks.push_back({bin, det});
    }

    if (clicks.size() < 2) return std::nullopt;

    // Charlie keeps two clicks; with more than two he picks uniformly.
    Click first = clicks[0], second = clicks[1];
    if (clicks.size() > 2) {
        std::uniform_int_distribution<std::size_t> pick_a(0, clicks.size() - 1);
        const std::size_t a = pick_a(rng);
        std::uniform_int_distribution<std::size_t> pick_b(0, clicks.size() - 2);
        std::size_t b = pick_b(rng);
        if (b >= a) ++b;
        first = clicks[a];
        second = clicks[b];
    }
    if (first.bin == second.bin) return std::nullopt;
    if (first.bin > second.bin) std::swap(first, second);

    DetectionEvent event{first.bin, second.bin, first.detector, second.detector};

    const MatchClass match = match_class(alice, bob, event.m, event.n);
    if (match == MatchClass::NoMatch) {
        TrialOutcome out;
        out.sift.match_class = MatchClass::NoMatch;
        return out;
    }

    const DetectorClass cls = event.detector_m == event.detector_n ? DetectorClass::SAME
                                                                   : DetectorClass::DIFF;
    TrialOutcome out;
    out.sift = sift(match, cls, alice.bits[event.m], alice.bits[event.n],
                    bob.bits[event.m], bob.bits[event.n]);
    out.agree = out.sift.s_a == out.sift.s_b;
    return out;
}

TrialStats run_batch(const ProtocolParams& params, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw ParamError("run_batch: trials must be >= 1");
    params.validate();
    TrialStats stats;
    stats.trains = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        // one independent substream per trial: order- and thread-agnostic
        std::seed_seq sseq{seed, t};
        std::mt19937_64 rng(sseq);
        const auto outcome = run_trial(params, rng);
        if (!outcome) continue;
        ++stats.success_detections;
        if (outcome->sift.match_class == MatchClass::NoMatch) continue;
        ++stats.matched;
        if (!outcome->agree) ++stats.sift_errors;
    }
    return stats;
}

}  // namespace mppm
