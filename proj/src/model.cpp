#include "wignerab/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wignerab/errors.hpp"

namespace wignerab {

void validate(const SlitPairParams& params)
{
    if (!(params.x0 > 0.0) || !std::isfinite(params.x0)) {
        throw InvalidInput("x0 must be positive and finite");
    }
    if (!(params.d > 0.0) || !std::isfinite(params.d)) {
        throw InvalidInput("d must be positive and finite");
    }
    if (!(params.hbar > 0.0) || !std::isfinite(params.hbar)) {
        throw InvalidInput("hbar must be positive and finite");
    }
    if (!(params.alpha >= 0.0) || !std::isfinite(params.alpha)) {
        throw InvalidInput("alpha must be non-negative and finite");
    }
    if (!std::isfinite(params.delta)) {
        throw InvalidInput("delta must be finite");
    }
}

SlitPairParams normalized_params(double alpha, double delta)
{
    SlitPairParams params{.x0 = 1.0, .d = 5.0, .delta = delta, .hbar = 1.0, .alpha = alpha};
    validate(params);
    return params;
}

double delta_big(const SlitPairParams& params)
{
    const double ah = params.alpha * params.hbar;
    const double x0sq = params.x0 * params.x0;
    return std::sqrt(ah * ah + x0sq * x0sq) / params.x0;
}

Grid1D::Grid1D(double min, double max, std::size_t n) : min_(min), max_(max), n_(n), spacing_(0.0)
{
    if (!std::isfinite(min) || !std::isfinite(max)) {
        throw InvalidInput("grid bounds must be finite");
    }
    if (n < 2) {
        throw InvalidInput("grid needs at least 2 points");
    }
    if (!(min < max)) {
        throw InvalidInput("grid requires min < max");
    }
    spacing_ = (max - min) / static_cast<double>(n - 1);
    if (!(spacing_ > 0.0)) {
        throw InvalidInput("grid spacing underflows");
    }
}

double Grid1D::point(std::size_t i) const noexcept
{
    if (i + 1 == n_) {
        return max_;
    }
    return min_ + static_cast<double>(i) * spacing_;
}

std::size_t Grid1D::index_of(double value) const noexcept
{
    const double t = std::round((value - min_) / spacing_);
    if (!(t > 0.0)) {
        return 0;
    }
    return std::min(static_cast<std::size_t>(t), n_ - 1);
}

std::vector<double> Grid1D::points() const
{
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        out[i] = point(i);
    }
    return out;
}

Grid1D Grid1D::padded(std::size_t extra) const
{
    const double pad = static_cast<double>(extra) * spacing_;
    return Grid1D(min_ - pad, max_ + pad, n_ + 2 * extra);
}

WignerField::WignerField(Grid2D grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values))
{
    if (values_.size() != grid_.x_axis.size() * grid_.p_axis.size()) {
        throw InvalidInput("Wigner field has " + std::to_string(values_.size()) + " values, grid needs "
                           + std::to_string(grid_.x_axis.size() * grid_.p_axis.size()));
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw InvalidInput("Wigner field contains a non-finite value");
        }
    }
}

WignerField::WignerField(Grid2D grid)
    : grid_(std::move(grid)), values_(grid_.x_axis.size() * grid_.p_axis.size(), 0.0)
{
}

double WignerField::max_abs() const noexcept
{
    double m = 0.0;
    for (double v : values_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

SampledWavefunction::SampledWavefunction(Grid1D grid_, std::vector<Complex> values_)
    : grid(std::move(grid_)), values(std::move(values_))
{
    if (values.size() != grid.size()) {
        throw InvalidInput("wavefunction length does not match its grid");
    }
    for (const Complex& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw InvalidInput("wavefunction contains a non-finite value");
        }
    }
}

const char* to_string(Axis axis) noexcept
{
    return axis == Axis::position ? "position" : "momentum";
}

MarginalCurve::MarginalCurve(Axis axis_, Grid1D grid_, std::vector<double> values_)
    : axis(axis_), grid(std::move(grid_)), values(std::move(values_))
{
    if (values.size() != grid.size()) {
        throw InvalidInput("marginal length does not match its grid");
    }
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0) {
            throw InvalidInput("marginal values must be finite and non-negative");
        }
    }
}

} // namespace wignerab
