#pragma once

#include <string>

#include "stereo/evaluation.hpp"

namespace stereo {

/// Fully resolved pipeline configuration. Defaults mirror the reference
/// parameter set: d_max = 40, f = 30, T = 20, alpha = 1.
struct RunConfig {
    Algorithm algorithm = Algorithm::Global;
    int n = 1;
    int m = 1;
    int d_max = 40;
    int iterations = 10;   // global smoothing passes
    double v_lg = 60.0;    // line-growing threshold
    double alpha = 1.0;
    double f = 30.0;
    double t = 20.0;
    int median_window = 5;

    std::string left_path;
    std::string right_path;
    std::string output_path;
};

/// Throws std::invalid_argument when a field is out of range.
void validate(const RunConfig& config);

/// Parses a key=value config file ('#' comments allowed) over the defaults.
/// Accepted keys: algorithm, n, m, dmax, iterations, vlg, alpha, f, t,
/// median, left, right, output. Unknown keys, malformed values and
/// out-of-range values raise std::invalid_argument with the line number.
RunConfig load_config(const std::string& path);

/// Same parse applied over an explicit base config (used for CLI-over-file
/// precedence: defaults -> file -> flags).
RunConfig load_config_over(const std::string& path, RunConfig base);

/// One-line echo of every resolved field, for reproducible reports.
std::string describe(const RunConfig& config);

Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm algorithm);

}  // namespace stereo
