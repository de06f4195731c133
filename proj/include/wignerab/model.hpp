#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace wignerab {

using Complex = std::complex<double>;

/// Two Gaussian slits of width x0 at +-d, with relative phase delta, in units
/// where the action constant is hbar. alpha = t/m is the free-flight parameter.
///
/// The slit amplitudes are equal and unnormalized:
///   phi(x) = exp(-(x-d)^2/2x0^2) e^{-i delta/2} + exp(-(x+d)^2/2x0^2) e^{+i delta/2}
struct SlitPairParams {
    double x0 = 1.0;
    double d = 5.0;
    double delta = 0.0;
    double hbar = 1.0;
    double alpha = 0.0;
};

/// Throws InvalidInput unless x0, d, hbar > 0, alpha >= 0 and delta is finite.
void validate(const SlitPairParams& params);

/// Default run in normalized units: x0 = 1, hbar = 1, d = 5.
SlitPairParams normalized_params(double alpha = 0.0, double delta = 0.0);

/// Width of each propagated slit packet, sqrt(alpha^2 hbar^2 + x0^4) / x0.
double delta_big(const SlitPairParams& params);

/// Uniform lattice including both endpoints.
class Grid1D {
public:
    Grid1D(double min, double max, std::size_t n);

    double min() const noexcept { return min_; }
    double max() const noexcept { return max_; }
    std::size_t size() const noexcept { return n_; }
    double spacing() const noexcept { return spacing_; }

    /// min + i * spacing; the last point is exactly max.
    double point(std::size_t i) const noexcept;

    /// Index of the nearest lattice point, clamped to [0, n-1].
    std::size_t index_of(double value) const noexcept;

    std::vector<double> points() const;

    /// Same spacing, extended by `extra` points on each side.
    Grid1D padded(std::size_t extra) const;

    bool operator==(const Grid1D&) const = default;

private:
    double min_;
    double max_;
    std::size_t n_;
    double spacing_;
};

struct Grid2D {
    Grid1D x_axis;
    Grid1D p_axis;

    bool operator==(const Grid2D&) const = default;
};

/// Real Wigner field sampled on a Grid2D, stored row-major: [x_index][p_index].
class WignerField {
public:
    WignerField(Grid2D grid, std::vector<double> values);
    explicit WignerField(Grid2D grid);

    const Grid2D& grid() const noexcept { return grid_; }
    std::size_t nx() const noexcept { return grid_.x_axis.size(); }
    std::size_t np() const noexcept { return grid_.p_axis.size(); }

    double at(std::size_t ix, std::size_t ip) const noexcept { return values_[ix * np() + ip]; }
    double& at(std::size_t ix, std::size_t ip) noexcept { return values_[ix * np() + ip]; }

    const std::vector<double>& values() const noexcept { return values_; }

    double max_abs() const noexcept;

private:
    Grid2D grid_;
    std::vector<double> values_;
};

struct SampledWavefunction {
    SampledWavefunction(Grid1D grid, std::vector<Complex> values);

    Grid1D grid;
    std::vector<Complex> values;
};

enum class Axis { position, momentum };

const char* to_string(Axis axis) noexcept;

/// A probability density along one axis. Values are finite and non-negative.
struct MarginalCurve {
    MarginalCurve(Axis axis, Grid1D grid, std::vector<double> values);

    Axis axis;
    Grid1D grid;
    std::vector<double> values;
};

struct FringeReport {
    std::vector<double> maxima;
    std::optional<double> period_estimate;
    std::optional<double> shift_vs_reference;
    std::optional<std::pair<double, double>> pattern_interval;
};

} // namespace wignerab
