#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stereo/energy.hpp"
#include "stereo/global_matcher.hpp"
#include "stereo/image.hpp"
#include "stereo/line_grower.hpp"

namespace stereo {

enum class Algorithm { Global, LineGrow };

/// One benchmark configuration: which matcher to run and with what knobs.
struct BenchConfig {
    std::string label;
    Algorithm algorithm = Algorithm::Global;
    MatchWindow win{1, 1};
    int d_max = 40;
    int iterations = 10;  // global only
    double v_lg = 60.0;   // line growing only
};

/// One row of the reliability/speed comparison.
struct BenchRecord {
    std::string label;
    double r_d_unfiltered = 0.0;
    double r_d_filtered = 0.0;
    double seconds = 0.0;  // matching stage only
    double retained_fraction = 0.0;
    std::optional<double> bad_pixel_rate;
};

/// Optional ground-truth scoring inputs for run_benchmark.
struct TruthSpec {
    const GrayMap* truth = nullptr;
    double scale = 1.0;      // truth-encoding divisor
    double threshold = 1.0;  // |d - truth/scale| > threshold counts as bad
};

/// The five standard comparison configurations: global 1x1, global 1x5,
/// global 3x3, line growing V_LG=60 and V_LG=10, all with d_max = 40.
std::vector<BenchConfig> canonical_configs();

/// Runs each configuration end-to-end (match -> E_d -> filter at alpha) and
/// returns one record per config, in input order. Only the matching stage is
/// timed. Throws on an empty config list; pipeline errors propagate.
std::vector<BenchRecord> run_benchmark(const ColorImage& left, const ColorImage& right,
                                       const std::vector<BenchConfig>& configs, double alpha,
                                       const TruthSpec& truth = {});

/// Fraction of estimated pixels whose disparity differs from the scaled
/// ground truth by more than `threshold`.
double bad_pixel_rate(const DisparityMap& d, const GrayMap& truth, double threshold,
                      double scale);

std::string bench_csv_header();
std::string bench_csv(const std::vector<BenchRecord>& records);
std::string bench_table(const std::vector<BenchRecord>& records);

}  // namespace stereo
