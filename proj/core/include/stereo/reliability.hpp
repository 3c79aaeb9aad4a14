#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "stereo/energy.hpp"
#include "stereo/global_matcher.hpp"
#include "stereo/image.hpp"

namespace stereo {

/// "no-estimated" marker for disparity-map energies.
inline constexpr double kNoEnergy = std::numeric_limits<double>::quiet_NaN();

inline bool is_no_energy(double v) { return v != v; }

/// Per-pixel error energy E_d of an already-chosen disparity map.
struct MapEnergy {
    int width = 0;
    int height = 0;
    std::vector<double> entries;  // nonnegative energy, or kNoEnergy

    MapEnergy() = default;
    MapEnergy(int w, int h) : width(w), height(h), entries(std::size_t(w) * h, kNoEnergy) {}

    double& at(int row, int col) { return entries[std::size_t(row) * width + col]; }
    double at(int row, int col) const { return entries[std::size_t(row) * width + col]; }
};

/// Reliability statistics of a disparity map: R_d = 1 / Mean(E_d - {ne}),
/// S_d = number of non-ne energy pixels. A zero mean reports R_d = +inf.
/// ve/alpha are NaN on reports that did not come from a filtering step.
struct ReliabilityReport {
    double r_d = 0.0;
    std::size_t s_d = 0;
    double mean_energy = 0.0;
    double ve = std::numeric_limits<double>::quiet_NaN();
    double alpha = std::numeric_limits<double>::quiet_NaN();
    double retained_fraction = 1.0;
};

/// Raised when a map has no estimated pixels to take statistics over.
struct NoEstimatesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by verify_monotonicity when the reliability sequence decreases,
/// which would contradict the alpha-monotonicity guarantee and indicates an
/// implementation bug.
struct PropertyViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Evaluates the windowed energy of each estimated pixel at its assigned
/// disparity. ne disparities propagate; windows that exit either image map
/// to ne as well.
MapEnergy map_energy(const ColorImage& left, const ColorImage& right, const DisparityMap& d,
                     MatchWindow win);

/// Mean-based reliability over the non-ne entries. Throws NoEstimatesError
/// on an all-ne map.
ReliabilityReport reliability(const MapEnergy& e_d);

struct FilterResult {
    DisparityMap disparity;  // d-tilde: filtered pixels become kNoEstimate
    MapEnergy energy;        // E-tilde: filtered pixels become kNoEnergy
    ReliabilityReport report;
};

/// Average-error thresholding: Ve = alpha * Mean(E_d - {ne}) from the
/// UNFILTERED energies; pixels with E_d <= Ve are retained, the rest become
/// ne in both outputs. The report is computed on the filtered energies.
FilterResult filter_unreliable(const DisparityMap& d, const MapEnergy& e_d, double alpha);

/// Applies filter_unreliable independently per alpha (strictly decreasing,
/// all >= 0) to the same unfiltered inputs and returns the reports in order.
/// Throws PropertyViolation if R_d ever decreases along the sequence.
std::vector<ReliabilityReport> verify_monotonicity(const DisparityMap& d, const MapEnergy& e_d,
                                                   const std::vector<double>& alphas);

std::string report_csv_header();
std::string report_csv(const ReliabilityReport& report);
std::string report_text(const ReliabilityReport& report);

}  // namespace stereo
