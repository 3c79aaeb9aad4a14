#include "stereo/run_config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stereo {
namespace {

[[noreturn]] void bad_line(const std::string& path, int line, const std::string& what) {
    std::ostringstream msg;
    msg << path << ":" << line << ": " << what;
    throw std::invalid_argument(msg.str());
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

int parse_int(const std::string& path, int line, const std::string& value) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        bad_line(path, line, "expected an integer, got '" + value + "'");
    }
}

double parse_double(const std::string& path, int line, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        bad_line(path, line, "expected a number, got '" + value + "'");
    }
}

}  // namespace

Algorithm parse_algorithm(const std::string& name) {
    if (name == "global") return Algorithm::Global;
    if (name == "linegrow") return Algorithm::LineGrow;
    throw std::invalid_argument("unknown algorithm '" + name + "' (expected global or linegrow)");
}

std::string algorithm_name(Algorithm algorithm) {
    return algorithm == Algorithm::Global ? "global" : "linegrow";
}

void validate(const RunConfig& config) {
    if (config.n < 1 || config.m < 1)
        throw std::invalid_argument("window sizes n and m must be >= 1");
    if (config.d_max < 0) throw std::invalid_argument("dmax must be >= 0");
    if (config.iterations < 0) throw std::invalid_argument("iterations must be >= 0");
    if (config.v_lg < 0.0) throw std::invalid_argument("vlg must be >= 0");
    if (config.alpha < 0.0) throw std::invalid_argument("alpha must be >= 0");
    if (config.f <= 0.0) throw std::invalid_argument("f must be > 0");
    if (config.t <= 0.0) throw std::invalid_argument("t must be > 0");
    if (config.median_window < 1 || config.median_window % 2 == 0)
        throw std::invalid_argument("median window must be odd and >= 1");
}

RunConfig load_config(const std::string& path) { return load_config_over(path, RunConfig{}); }

RunConfig load_config_over(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(path + ": cannot open config file");

    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string entry = trim(raw);
        if (entry.empty()) continue;

        const auto eq = entry.find('=');
        if (eq == std::string::npos) bad_line(path, line, "expected key = value");
        const std::string key = trim(entry.substr(0, eq));
        const std::string value = trim(entry.substr(eq + 1));
        if (key.empty() || value.empty()) bad_line(path, line, "expected key = value");

        if (key == "algorithm") {
            try {
                base.algorithm = parse_algorithm(value);
            } catch (const std::exception& e) {
                bad_line(path, line, e.what());
            }
        } else if (key == "n") {
            base.n = parse_int(path, line, value);
        } else if (key == "m") {
            base.m = parse_int(path, line, value);
        } else if (key == "dmax") {
            base.d_max = parse_int(path, line, value);
        } else if (key == "iterations") {
            base.iterations = parse_int(path, line, value);
        } else if (key == "vlg") {
            base.v_lg = parse_double(path, line, value);
        } else if (key == "alpha") {
            base.alpha = parse_double(path, line, value);
        } else if (key == "f") {
            base.f = parse_double(path, line, value);
        } else if (key == "t") {
            base.t = parse_double(path, line, value);
        } else if (key == "median") {
            base.median_window = parse_int(path, line, value);
        } else if (key == "left") {
            base.left_path = value;
        } else if (key == "right") {
            base.right_path = value;
        } else if (key == "output") {
            base.output_path = value;
        } else {
            bad_line(path, line, "unknown key '" + key + "'");
        }
    }

    try {
        validate(base);
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return base;
}

std::string describe(const RunConfig& config) {
    std::ostringstream out;
    out << "algorithm=" << algorithm_name(config.algorithm) << " n=" << config.n
        << " m=" << config.m << " dmax=" << config.d_max << " iterations=" << config.iterations
        << " vlg=" << config.v_lg << " alpha=" << config.alpha << " f=" << config.f
        << " t=" << config.t << " median=" << config.median_window;
    return out.str();
}

}  // namespace stereo
