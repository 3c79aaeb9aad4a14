#include "stereo/reliability.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "stereo/parallel.hpp"

namespace stereo {
namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

}  // namespace

MapEnergy map_energy(const ColorImage& left, const ColorImage& right, const DisparityMap& d,
                     MatchWindow win) {
    if (!left.same_size(right))
        throw std::invalid_argument("map_energy: image dimensions differ");
    if (d.width != right.width || d.height != right.height)
        throw std::invalid_argument("map_energy: disparity map dimensions differ");
    if (win.rows < 1 || win.cols < 1)
        throw std::invalid_argument("map_energy: window must be at least 1x1");

    const int n = win.rows, m = win.cols;
    const double denom = 3.0 * n * m;
    MapEnergy energy(d.width, d.height);

    parallel_chunks(d.height, [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            for (int j = 0; j < d.width; ++j) {
                const int disp = d.at(i, j);
                if (disp == kNoEstimate) continue;
                if (i + n > d.height || j + m > d.width || j + disp + m > d.width)
                    continue;  // window exits an image: ne
                double sum = 0.0;
                for (int x = i; x < i + n; ++x) {
                    for (int y = j; y < j + m; ++y) {
                        for (int k = 0; k < 3; ++k) {
                            const double diff =
                                left.sample(x, y + disp, k) - right.sample(x, y, k);
                            sum += diff * diff;
                        }
                    }
                }
                energy.at(i, j) = sum / denom;
            }
        }
    });
    return energy;
}

ReliabilityReport reliability(const MapEnergy& e_d) {
    double sum = 0.0;
    std::size_t count = 0;
    for (double v : e_d.entries) {
        if (is_no_energy(v)) continue;
        sum += v;
        ++count;
    }
    if (count == 0) throw NoEstimatesError("reliability: map has no estimated pixels");

    ReliabilityReport report;
    report.s_d = count;
    report.mean_energy = sum / static_cast<double>(count);
    report.r_d = report.mean_energy > 0.0 ? 1.0 / report.mean_energy
                                          : std::numeric_limits<double>::infinity();
    return report;
}

FilterResult filter_unreliable(const DisparityMap& d, const MapEnergy& e_d, double alpha) {
    if (alpha < 0.0) throw std::invalid_argument("filter_unreliable: alpha must be >= 0");
    if (d.width != e_d.width || d.height != e_d.height)
        throw std::invalid_argument("filter_unreliable: map dimensions differ");

    // Ve always comes from the unfiltered energies (this also rejects all-ne
    // inputs up front).
    const ReliabilityReport unfiltered = reliability(e_d);
    const double ve = alpha * unfiltered.mean_energy;

    FilterResult result{DisparityMap(d.width, d.height), MapEnergy(d.width, d.height), {}};
    for (std::size_t idx = 0; idx < e_d.entries.size(); ++idx) {
        const double e = e_d.entries[idx];
        if (is_no_energy(e) || e > ve) continue;  // ne in both outputs
        result.energy.entries[idx] = e;
        result.disparity.values[idx] = d.values[idx];
    }

    result.report = reliability(result.energy);
    result.report.ve = ve;
    result.report.alpha = alpha;
    result.report.retained_fraction =
        static_cast<double>(result.report.s_d) / static_cast<double>(unfiltered.s_d);
    return result;
}

std::vector<ReliabilityReport> verify_monotonicity(const DisparityMap& d, const MapEnergy& e_d,
                                                   const std::vector<double>& alphas) {
    if (alphas.empty()) throw std::invalid_argument("verify_monotonicity: no alphas given");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (alphas[i] < 0.0)
            throw std::invalid_argument("verify_monotonicity: alphas must be >= 0");
        if (i > 0 && !(alphas[i] < alphas[i - 1]))
            throw std::invalid_argument("verify_monotonicity: alphas must be strictly decreasing");
    }

    std::vector<ReliabilityReport> reports;
    reports.reserve(alphas.size());
    for (double alpha : alphas) reports.push_back(filter_unreliable(d, e_d, alpha).report);

    for (std::size_t i = 1; i < reports.size(); ++i) {
        if (reports[i].r_d < reports[i - 1].r_d) {
            std::ostringstream msg;
            msg << "verify_monotonicity: R_d decreased from " << reports[i - 1].r_d << " (alpha="
                << alphas[i - 1] << ") to " << reports[i].r_d << " (alpha=" << alphas[i] << ")";
            throw PropertyViolation(msg.str());
        }
    }
    return reports;
}

std::string report_csv_header() {
    return "r_d,s_d,mean_energy,ve,alpha,retained_fraction";
}

std::string report_csv(const ReliabilityReport& report) {
    std::ostringstream out;
    out << fmt("%.9g", report.r_d) << "," << report.s_d << "," << fmt("%.9g", report.mean_energy)
        << "," << fmt("%.9g", report.ve) << "," << fmt("%.9g", report.alpha) << ","
        << fmt("%.9g", report.retained_fraction);
    return out.str();
}

std::string report_text(const ReliabilityReport& report) {
    std::ostringstream out;
    out << "R_d = " << fmt("%.6g", report.r_d) << "  (mean energy " << fmt("%.6g", report.mean_energy)
        << " over " << report.s_d << " estimated pixels)";
    if (!std::isnan(report.alpha)) {
        out << "\nVe = " << fmt("%.6g", report.ve) << " at alpha = " << fmt("%.6g", report.alpha)
            << ", retained fraction " << fmt("%.4g", report.retained_fraction);
    }
    return out.str();
}

}  // namespace stereo
