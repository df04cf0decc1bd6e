#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

namespace mppm {

/// Raised when a ProtocolParams field is out of range or a config file is malformed.
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Physical and protocol constants shared by the analytic model and the
/// Monte Carlo engine. Immutable after validation.
struct ProtocolParams {
    int train_length = 128;        // L, pulses per train
    double mu = 0.1;               // mean photon number per train per party
    double distance_km = 0.0;      // total Alice-Bob fiber length, Charlie at midpoint
    double alpha_db_per_km = 0.2;  // fiber attenuation
    double detector_efficiency = 0.19;  // eta_B
    double dark_count = 1.28e-7;   // Y0 / p_d, per detection opportunity
    double misalignment = 0.015;   // e_d
    double ec_efficiency = 1.16;   // f >= 1
    int v_th = 5;                  // photon-number threshold for the phase-error bound
    int phase_slices = 16;         // M, discretization of [0, 2pi)

    // Throws ParamError on any out-of-range field.
    void validate() const;
};

// Table defaults: Y0 = 1e-9 * L, eta_B = 0.19, e_d = 0.015, f = 1.16,
// alpha = 0.2 dB/km, L = 128, M = 16. mu and v_th are placeholders for
// the caller or the optimizer.
ProtocolParams default_params();

// Plain-text config, one `key = value` per line, keys matching the field
// names above. Blank lines and lines starting with '#' are skipped; an
// unknown key is an error. Values are applied on top of default_params().
ProtocolParams load_config(const std::filesystem::path& path);
ProtocolParams parse_config(const std::string& text);

std::string to_config(const ProtocolParams& p);

}  // namespace mppm
