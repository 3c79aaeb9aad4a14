// Command-line front end for the region-based stereo pipeline:
//   match  - compute a disparity map (global or line-growing matcher)
//   filter - drop unreliable estimates by average-error thresholding
//   depth  - median-filter disparities and convert to depth
//   cloud  - export an XYZRGB point cloud as ASCII PLY
//   bench  - reliability/speed comparison over the canonical configurations
//
// Exit codes: 0 success, 1 pipeline error, 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "stereo/depth.hpp"
#include "stereo/evaluation.hpp"
#include "stereo/global_matcher.hpp"
#include "stereo/image.hpp"
#include "stereo/line_grower.hpp"
#include "stereo/reliability.hpp"
#include "stereo/run_config.hpp"

namespace {

using namespace stereo;

// Sidecar mask path for a disparity raster: d.pgm -> d.mask.pgm.
std::string mask_path_for(const std::string& path) {
    if (path.size() >= 4 && path.ends_with(".pgm"))
        return path.substr(0, path.size() - 4) + ".mask.pgm";
    return path + ".mask.pgm";
}

// Disparity rasters render ne as 0; the sidecar mask (255 = estimated)
// preserves the distinction for downstream subcommands.
void save_disparity(const DisparityMap& d, const std::string& path) {
    GrayMap raster(d.width, d.height);
    GrayMap mask(d.width, d.height);
    for (std::size_t i = 0; i < d.values.size(); ++i) {
        raster.data[i] = d.values[i] == kNoEstimate ? 0.0 : d.values[i];
        mask.data[i] = d.values[i] == kNoEstimate ? 0.0 : 255.0;
    }
    save_gray(raster, path, false);
    save_gray(mask, mask_path_for(path), false);
}

DisparityMap load_disparity(const std::string& path) {
    const GrayMap raster = load_gray(path);
    DisparityMap d(raster.width, raster.height);
    for (std::size_t i = 0; i < raster.data.size(); ++i)
        d.values[i] = static_cast<int>(raster.data[i]);

    const std::string mask_path = mask_path_for(path);
    if (std::filesystem::exists(mask_path)) {
        const GrayMap mask = load_gray(mask_path);
        if (mask.width != d.width || mask.height != d.height)
            throw std::runtime_error(mask_path + ": mask dimensions differ from disparity");
        for (std::size_t i = 0; i < mask.data.size(); ++i)
            if (mask.data[i] == 0.0) d.values[i] = kNoEstimate;
    }
    return d;
}

void echo_config(const RunConfig& rc) { std::cout << "config: " << describe(rc) << "\n"; }

// Per-subcommand option set with defaults < config file < explicit flags.
struct ConfigBinding {
    std::string config_path;
    std::string algorithm;
    int n = 0, m = 0, d_max = 0, iterations = 0, median = 0;
    double v_lg = 0.0, alpha = 0.0, f = 0.0, t = 0.0;

    CLI::Option* algorithm_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* m_opt = nullptr;
    CLI::Option* d_max_opt = nullptr;
    CLI::Option* iterations_opt = nullptr;
    CLI::Option* v_lg_opt = nullptr;
    CLI::Option* alpha_opt = nullptr;
    CLI::Option* f_opt = nullptr;
    CLI::Option* t_opt = nullptr;
    CLI::Option* median_opt = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "key=value config file");
        algorithm_opt =
            cmd->add_option("--algorithm", algorithm, "matcher: global or linegrow");
        n_opt = cmd->add_option("-n,--rows", n, "window rows");
        m_opt = cmd->add_option("-m,--cols", m, "window columns");
        d_max_opt = cmd->add_option("--dmax", d_max, "disparity search range");
        iterations_opt = cmd->add_option("--iterations", iterations, "smoothing passes (global)");
        v_lg_opt = cmd->add_option("--vlg", v_lg, "line-growing energy threshold");
        alpha_opt = cmd->add_option("--alpha", alpha, "filter tolerance coefficient");
        f_opt = cmd->add_option("--focal", f, "focal length f");
        t_opt = cmd->add_option("--baseline", t, "baseline T");
        median_opt = cmd->add_option("--median", median, "median window (odd, 1 = off)");
    }

    RunConfig resolve() const {
        RunConfig rc;
        if (!config_path.empty()) rc = load_config_over(config_path, rc);
        if (algorithm_opt->count()) rc.algorithm = parse_algorithm(algorithm);
        if (n_opt->count()) rc.n = n;
        if (m_opt->count()) rc.m = m;
        if (d_max_opt->count()) rc.d_max = d_max;
        if (iterations_opt->count()) rc.iterations = iterations;
        if (v_lg_opt->count()) rc.v_lg = v_lg;
        if (alpha_opt->count()) rc.alpha = alpha;
        if (f_opt->count()) rc.f = f;
        if (t_opt->count()) rc.t = t;
        if (median_opt->count()) rc.median_window = median;
        validate(rc);
        return rc;
    }
};

int cmd_match(const RunConfig& rc, const std::string& energy_dir,
              const std::string& status_out) {
    echo_config(rc);
    auto [left, right] = load_stereo_pair(rc.left_path, rc.right_path);

    DisparityMap disparity;
    if (rc.algorithm == Algorithm::Global) {
        GlobalMatchResult result =
            global_match(left, right, {rc.n, rc.m}, rc.d_max, rc.iterations);
        disparity = std::move(result.disparity);
        if (!energy_dir.empty()) {
            std::filesystem::create_directories(energy_dir);
            for (int d = 0; d <= result.volume.d_max; ++d) {
                std::ostringstream name;
                name << energy_dir << "/e_" << std::setw(3) << std::setfill('0') << d << ".pgm";
                save_gray(result.volume.slice(d), name.str(), true);
            }
        }
    } else {
        GrowConfig cfg{{1, rc.m}, rc.d_max, rc.v_lg};
        LineGrowResult result = line_grow_match(left, right, cfg);
        disparity = std::move(result.disparity);
        if (!status_out.empty()) {
            GrayMap raster(result.status.width, result.status.height);
            for (std::size_t i = 0; i < result.status.statuses.size(); ++i)
                raster.data[i] = 85.0 * static_cast<double>(result.status.statuses[i]);
            save_gray(raster, status_out, false);
        }
        std::cout << "idle points: " << result.status.count(PointStatus::Idle) << "\n";
    }

    save_disparity(disparity, rc.output_path);
    std::cout << "estimated " << disparity.estimated_count() << " of "
              << disparity.values.size() << " pixels -> " << rc.output_path << "\n";
    return 0;
}

int cmd_filter(const RunConfig& rc, const std::string& disparity_path,
               const std::string& report_path, const std::string& energy_out) {
    echo_config(rc);
    auto [left, right] = load_stereo_pair(rc.left_path, rc.right_path);
    const DisparityMap d = load_disparity(disparity_path);

    const MapEnergy energy = map_energy(left, right, d, {rc.n, rc.m});
    const ReliabilityReport before = reliability(energy);
    const FilterResult result = filter_unreliable(d, energy, rc.alpha);

    std::cout << "unfiltered: " << report_text(before) << "\n";
    std::cout << "filtered:   " << report_text(result.report) << "\n";
    std::cout << report_csv_header() << "\n" << report_csv(result.report) << "\n";
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw std::runtime_error(report_path + ": cannot open file for writing");
        out << report_csv_header() << "\n" << report_csv(result.report) << "\n";
    }
    if (!energy_out.empty()) {
        GrayMap raster(result.energy.width, result.energy.height,
                       std::numeric_limits<double>::quiet_NaN());
        raster.data = result.energy.entries;
        save_gray(raster, energy_out, true);
    }

    save_disparity(result.disparity, rc.output_path);
    std::cout << "retained " << result.disparity.estimated_count() << " pixels -> "
              << rc.output_path << "\n";
    return 0;
}

int cmd_depth(const RunConfig& rc, const std::string& disparity_path) {
    echo_config(rc);
    DisparityMap d = load_disparity(disparity_path);
    if (rc.median_window > 1) d = median_filter(d, rc.median_window);
    const DepthMap depth = depth_from_disparity(d, {rc.f, rc.t});
    save_gray(depth_raster(depth), rc.output_path, true);
    std::cout << "depth map -> " << rc.output_path << "\n";
    return 0;
}

int cmd_cloud(const RunConfig& rc, const std::string& disparity_path,
              const std::string& right_path) {
    echo_config(rc);
    const ColorImage right = load_color(right_path);
    DisparityMap d = load_disparity(disparity_path);
    if (rc.median_window > 1) d = median_filter(d, rc.median_window);
    const DepthMap depth = depth_from_disparity(d, {rc.f, rc.t});
    const PointCloud cloud = project_xyz(depth, {rc.f, rc.t}, right);
    export_ply(cloud, rc.output_path);
    std::cout << cloud.points.size() << " points -> " << rc.output_path << "\n";
    return 0;
}

int cmd_bench(const RunConfig& rc, const std::string& truth_path, double truth_scale,
              double bad_threshold) {
    echo_config(rc);
    auto [left, right] = load_stereo_pair(rc.left_path, rc.right_path);

    GrayMap truth;
    TruthSpec spec;
    if (!truth_path.empty()) {
        truth = load_gray(truth_path);
        spec = {&truth, truth_scale, bad_threshold};
    }

    const std::vector<BenchRecord> records =
        run_benchmark(left, right, canonical_configs(), rc.alpha, spec);
    std::cout << bench_table(records);
    if (!rc.output_path.empty()) {
        std::ofstream out(rc.output_path);
        if (!out) throw std::runtime_error(rc.output_path + ": cannot open file for writing");
        out << bench_csv(records);
        std::cout << "report -> " << rc.output_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Region-based stereo matching: disparity, reliability filtering, depth"};
    app.require_subcommand(1);

    // match
    auto* match = app.add_subcommand("match", "compute a disparity map");
    ConfigBinding match_cfg;
    std::string left_path, right_path, output_path, energy_dir, status_out;
    match->add_option("left", left_path, "left image (PPM/PNG)")->required();
    match->add_option("right", right_path, "right image (PPM/PNG)")->required();
    match->add_option("-o,--output", output_path, "disparity PGM output")->required();
    match_cfg.attach(match);
    match->add_option("--dump-energy", energy_dir, "directory for per-slice energy PGMs");
    match->add_option("--status-out", status_out, "line-growing status map PGM");

    // filter
    auto* filter = app.add_subcommand("filter", "drop unreliable disparity estimates");
    ConfigBinding filter_cfg;
    std::string f_left, f_right, f_disparity, f_output, f_report, f_energy_out;
    filter->add_option("left", f_left, "left image")->required();
    filter->add_option("right", f_right, "right image")->required();
    filter->add_option("-d,--disparity", f_disparity, "disparity PGM from match")->required();
    filter->add_option("-o,--output", f_output, "filtered disparity PGM")->required();
    filter_cfg.attach(filter);
    filter->add_option("--report", f_report, "write the CSV report here");
    filter->add_option("--energy-out", f_energy_out, "filtered E_d rendering (PGM)");

    // depth
    auto* depth = app.add_subcommand("depth", "disparity to depth map");
    ConfigBinding depth_cfg;
    std::string d_disparity, d_output;
    depth->add_option("-d,--disparity", d_disparity, "disparity PGM")->required();
    depth->add_option("-o,--output", d_output, "depth PGM (normalized)")->required();
    depth_cfg.attach(depth);

    // cloud
    auto* cloud = app.add_subcommand("cloud", "disparity to PLY point cloud");
    ConfigBinding cloud_cfg;
    std::string c_disparity, c_right, c_output;
    cloud->add_option("-d,--disparity", c_disparity, "disparity PGM")->required();
    cloud->add_option("--right", c_right, "right image (point colors)")->required();
    cloud->add_option("-o,--output", c_output, "PLY output")->required();
    cloud_cfg.attach(cloud);

    // bench
    auto* bench = app.add_subcommand("bench", "canonical reliability/speed comparison");
    ConfigBinding bench_cfg;
    std::string b_left, b_right, b_output, b_truth;
    double truth_scale = 1.0, bad_threshold = 1.0;
    bench->add_option("left", b_left, "left image")->required();
    bench->add_option("right", b_right, "right image")->required();
    bench->add_option("-o,--output", b_output, "CSV report path");
    bench_cfg.attach(bench);
    bench->add_option("--truth", b_truth, "ground-truth disparity PGM");
    bench->add_option("--truth-scale", truth_scale, "truth encoding divisor");
    bench->add_option("--bad-threshold", bad_threshold, "bad-pixel threshold");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (match->parsed()) {
            RunConfig rc = match_cfg.resolve();
            rc.left_path = left_path;
            rc.right_path = right_path;
            rc.output_path = output_path;
            return cmd_match(rc, energy_dir, status_out);
        }
        if (filter->parsed()) {
            RunConfig rc = filter_cfg.resolve();
            rc.left_path = f_left;
            rc.right_path = f_right;
            rc.output_path = f_output;
            return cmd_filter(rc, f_disparity, f_report, f_energy_out);
        }
        if (depth->parsed()) {
            RunConfig rc = depth_cfg.resolve();
            rc.output_path = d_output;
            return cmd_depth(rc, d_disparity);
        }
        if (cloud->parsed()) {
            RunConfig rc = cloud_cfg.resolve();
            rc.output_path = c_output;
            return cmd_cloud(rc, c_disparity, c_right);
        }
        if (bench->parsed()) {
            RunConfig rc = bench_cfg.resolve();
            rc.left_path = b_left;
            rc.right_path = b_right;
            rc.output_path = b_output;
            return cmd_bench(rc, b_truth, truth_scale, bad_threshold);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
