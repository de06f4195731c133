#pragma once

#include <span>

namespace wignerab {

/// Composite trapezoid rule on uniformly spaced samples.
double trapezoid(std::span<const double> values, double spacing);

/// Composite trapezoid rule on arbitrary ascending abscissae.
double trapezoid(std::span<const double> abscissae, std::span<const double> values);

/// Composite Simpson rule on uniformly spaced samples. Requires an odd number
/// of samples (an even number of panels).
double simpson(std::span<const double> values, double spacing);

} // namespace wignerab
