#include "mppm/params.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace mppm {

void ProtocolParams::validate() const {
    auto fail = [](const std::string& msg) { throw ParamError(msg); };
    if (train_length < 2) fail("train_length must be >= 2");
    if (mu < 0) fail("mu must be >= 0");
    if (distance_km < 0) fail("distance_km must be >= 0");
    if (alpha_db_per_km < 0) fail("alpha_db_per_km must be >= 0");
    if (detector_efficiency < 0 || detector_efficiency > 1)
        fail("detector_efficiency must be in [0,1]");
    if (dark_count < 0 || dark_count >= 0.5) fail("dark_count must be in [0, 0.5)");
    if (misalignment < 0 || misalignment > 0.5) fail("misalignment must be in [0, 0.5]");
    if (ec_efficiency < 1) fail("ec_efficiency must be >= 1");
    if (v_th < 1) fail("v_th must be >= 1");
    if (phase_slices < 2 || phase_slices % 2 != 0)
        fail("phase_slices must be even and >= 2");
}

ProtocolParams default_params() {
    ProtocolParams p;
    p.train_length = 128;
    p.dark_count = 1e-9 * p.train_length;
    p.detector_efficiency = 0.19;
    p.misalignment = 0.015;
    p.ec_efficiency = 1.16;
    p.alpha_db_per_km = 0.2;
    p.phase_slices = 16;
    p.mu = 0.1;
    p.v_th = 5;
    return p;
}

namespace {

void apply_key(ProtocolParams& p, const std::string& key, const std::string& value,
               int line_no) {
    std::istringstream iss(value);
    bool ok = false;
    if (key == "train_length") ok = static_cast<bool>(iss >> p.train_length);
    else if (key == "mu") ok = static_cast<bool>(iss >> p.mu);
    else if (key == "distance_km") ok = static_cast<bool>(iss >> p.distance_km);
    else if (key == "alpha_db_per_km") ok = static_cast<bool>(iss >> p.alpha_db_per_km);
    else if (key == "detector_efficiency") ok = static_cast<bool>(iss >> p.detector_efficiency);
    else if (key == "dark_count") ok = static_cast<bool>(iss >> p.dark_count);
    else if (key == "misalignment") ok = static_cast<bool>(iss >> p.misalignment);
    else if (key == "ec_efficiency") ok = static_cast<bool>(iss >> p.ec_efficiency);
    else if (key == "v_th") ok = static_cast<bool>(iss >> p.v_th);
    else if (key == "phase_slices") ok = static_cast<bool>(iss >> p.phase_slices);
    else throw ParamError("unknown config key '" + key + "' at line " + std::to_string(line_no));
    if (!ok)
        throw ParamError("bad value for '" + key + "' at line " + std::to_string(line_no));
    std::string rest;
    if (iss >> rest)
        throw ParamError("trailing garbage after '" + key + "' at line " + std::to_string(line_no));
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

ProtocolParams parse_config(const std::string& text) {
    ProtocolParams p = default_params();
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ParamError("missing '=' at line " + std::to_string(line_no));
        apply_key(p, trim(t.substr(0, eq)), trim(t.substr(eq + 1)), line_no);
    }
    p.validate();
    return p;
}

ProtocolParams load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParamError("cannot open config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string to_config(const ProtocolParams& p) {
    std::ostringstream out;
    out.precision(17);
    out << "train_length = " << p.train_length << '\n'
        << "mu = " << p.mu << '\n'
        << "distance_km = " << p.distance_km << '\n'
        << "alpha_db_per_km = " << p.alpha_db_per_km << '\n'
        << "detector_efficiency = " << p.detector_efficiency << '\n'
        << "dark_count = " << p.dark_count << '\n'
        << "misalignment = " << p.misalignment << '\n'
        << "ec_efficiency = " << p.ec_efficiency << '\n'
        << "v_th = " << p.v_th << '\n'
        << "phase_slices = " << p.phase_slices << '\n';
    return out.str();
}

}  // namespace mppm
