#include "stereo/evaluation.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "stereo/reliability.hpp"

namespace stereo {
namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace

std::vector<BenchConfig> canonical_configs() {
    return {
        {"global_1x1", Algorithm::Global, {1, 1}, 40, 10, 60.0},
        {"global_1x5", Algorithm::Global, {1, 5}, 40, 10, 60.0},
        {"global_3x3", Algorithm::Global, {3, 3}, 40, 10, 60.0},
        {"linegrow_vlg60", Algorithm::LineGrow, {1, 5}, 40, 10, 60.0},
        {"linegrow_vlg10", Algorithm::LineGrow, {1, 5}, 40, 10, 10.0},
    };
}

std::vector<BenchRecord> run_benchmark(const ColorImage& left, const ColorImage& right,
                                       const std::vector<BenchConfig>& configs, double alpha,
                                       const TruthSpec& truth) {
    if (configs.empty()) throw std::invalid_argument("run_benchmark: empty config list");

    std::vector<BenchRecord> records;
    records.reserve(configs.size());

    for (const BenchConfig& cfg : configs) {
        DisparityMap disparity;

        const auto start = std::chrono::steady_clock::now();
        if (cfg.algorithm == Algorithm::Global) {
            disparity = global_match(left, right, cfg.win, cfg.d_max, cfg.iterations).disparity;
        } else {
            disparity = line_grow_match(left, right, {cfg.win, cfg.d_max, cfg.v_lg}).disparity;
        }
        const auto stop = std::chrono::steady_clock::now();

        const MapEnergy energy = map_energy(left, right, disparity, cfg.win);
        const ReliabilityReport unfiltered = reliability(energy);
        const FilterResult filtered = filter_unreliable(disparity, energy, alpha);

        BenchRecord record;
        record.label = cfg.label;
        record.r_d_unfiltered = unfiltered.r_d;
        record.r_d_filtered = filtered.report.r_d;
        record.seconds = std::chrono::duration<double>(stop - start).count();
        record.retained_fraction = filtered.report.retained_fraction;
        if (truth.truth)
            record.bad_pixel_rate = bad_pixel_rate(disparity, *truth.truth, truth.threshold,
                                                   truth.scale);
        records.push_back(std::move(record));
    }
    return records;
}

double bad_pixel_rate(const DisparityMap& d, const GrayMap& truth, double threshold,
                      double scale) {
    if (d.width != truth.width || d.height != truth.height)
        throw std::invalid_argument("bad_pixel_rate: dimensions differ");
    if (scale <= 0.0) throw std::invalid_argument("bad_pixel_rate: scale must be > 0");

    std::size_t estimated = 0, bad = 0;
    for (int i = 0; i < d.height; ++i) {
        for (int j = 0; j < d.width; ++j) {
            if (!d.has(i, j)) continue;
            ++estimated;
            if (std::abs(d.at(i, j) - truth.at(i, j) / scale) > threshold) ++bad;
        }
    }
    if (estimated == 0) throw NoEstimatesError("bad_pixel_rate: map has no estimated pixels");
    return static_cast<double>(bad) / static_cast<double>(estimated);
}

std::string bench_csv_header() {
    return "label,r_d_unfiltered,r_d_filtered,seconds,retained_fraction,bad_pixel_rate";
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << bench_csv_header() << "\n";
    for (const BenchRecord& r : records) {
        out << r.label << "," << fmt(r.r_d_unfiltered) << "," << fmt(r.r_d_filtered) << ","
            << fmt(r.seconds) << "," << fmt(r.retained_fraction) << ",";
        if (r.bad_pixel_rate) out << fmt(*r.bad_pixel_rate);
        out << "\n";
    }
    return out.str();
}

std::string bench_table(const std::vector<BenchRecord>& records) {
    auto cell = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4g", v);
        return std::string(buf);
    };
    std::ostringstream out;
    out << std::left << std::setw(18) << "config" << std::right << std::setw(12) << "R_d"
        << std::setw(14) << "R_d filtered" << std::setw(12) << "seconds" << std::setw(10)
        << "retained";
    bool any_truth = false;
    for (const BenchRecord& r : records) any_truth = any_truth || r.bad_pixel_rate.has_value();
    if (any_truth) out << std::setw(10) << "bad_px";
    out << "\n";
    for (const BenchRecord& r : records) {
        out << std::left << std::setw(18) << r.label << std::right << std::setw(12)
            << cell(r.r_d_unfiltered) << std::setw(14) << cell(r.r_d_filtered) << std::setw(12)
            << cell(r.seconds) << std::setw(10) << cell(r.retained_fraction);
        if (r.bad_pixel_rate) out << std::setw(10) << cell(*r.bad_pixel_rate);
        out << "\n";
    }
    return out.str();
}

}  // namespace stereo
