#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wignerab/model.hpp"

// Fringe extraction on marginal curves and the common-projection interval of
// two slit fields (the region where interference can occur at all).
namespace wignerab::analysis {

/// Prominence threshold used by fringe_period and fringe_shift, as a fraction
/// of the curve maximum.
inline constexpr double kDefaultProminence = 0.01;

/// Local maxima of `values` whose topographic prominence is at least
/// min_prominence * max(values), refined by a 3-point parabola. Flat plateaus
/// report their midpoint. Positions are ascending.
std::vector<double> find_local_maxima(std::span<const double> values, const Grid1D& grid, double min_prominence);

/// Local minima, by the same rules applied to -values.
std::vector<double> find_local_minima(std::span<const double> values, const Grid1D& grid, double min_prominence);

std::vector<double> find_fringe_maxima(const MarginalCurve& curve, double min_prominence);

/// Carrier wavenumber of the fringes: the peak of the Hann-weighted spectrum
/// |Sum w_i v_i exp(-i k x_i)| near 2 pi / (median spacing of maxima).
/// Throws AnalysisError with fewer than 3 maxima.
double fringe_wavenumber(const MarginalCurve& curve);

/// 2 pi / fringe_wavenumber(curve).
double fringe_period(const MarginalCurve& curve);

/// Displacement of the fringes of `curve` relative to `reference`, from the
/// phase of both spectra at the reference carrier wavenumber. The result lies
/// in [0, period): fringes are followed in the positive axis direction, and a
/// displacement of a whole period is reported as 0.
double fringe_shift(const MarginalCurve& curve, const MarginalCurve& reference);

/// Interval of `axis` where both fields' projections exceed threshold times
/// their own maximum. Empty when the two supports do not meet.
std::optional<std::pair<double, double>> common_projection_interval(const WignerField& field1,
                                                                   const WignerField& field2, Axis axis,
                                                                   double threshold);

} // namespace wignerab::analysis
