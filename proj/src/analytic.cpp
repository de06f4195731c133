#include "wignerab/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wignerab/errors.hpp"
#include "wignerab/quadrature.hpp"

namespace wignerab::analytic {

namespace {

double sq(double v) { return v * v; }

double prefactor(const SlitPairParams& params)
{
    return 2.0 * params.x0 * std::sqrt(std::numbers::pi);
}

double momentum_envelope(const SlitPairParams& params, double p)
{
    return std::exp(-sq(p * params.x0 / params.hbar));
}

} // namespace

double wdf_closed_form(const SlitPairParams& params, double x, double p)
{
    const double x0sq = sq(params.x0);
    const double upper = std::exp(-sq(x - params.d) / x0sq);
    const double lower = std::exp(-sq(x + params.d) / x0sq);
    const double cross = 2.0 * std::exp(-sq(x) / x0sq) * std::cos(2.0 * p * params.d / params.hbar - params.delta);
    return prefactor(params) * momentum_envelope(params, p) * (upper + lower + cross);
}

double wdf_propagated_closed_form(const SlitPairParams& params, double x, double p)
{
    return wdf_closed_form(params, x - params.alpha * p, p);
}

double slit_wdf_closed_form(const SlitPairParams& params, Slit slit, double x, double p)
{
    const double centre = slit == Slit::upper ? params.d : -params.d;
    return prefactor(params) * momentum_envelope(params, p) * std::exp(-sq(x - centre) / sq(params.x0));
}

double p_marginal_closed_form(const SlitPairParams& params, double p)
{
    const double c = std::cos(p * params.d / params.hbar - 0.5 * params.delta);
    return 8.0 * std::numbers::pi * sq(params.x0) * momentum_envelope(params, p) * c * c;
}

double x_marginal_propagated_closed_form(const SlitPairParams& params, double x)
{
    const double width = delta_big(params);
    const double w2 = sq(width);
    const double fringe_k = 2.0 * params.alpha * params.d * params.hbar / (sq(params.x0) * w2);
    const double slits = std::exp(-sq(x - params.d) / w2) + std::exp(-sq(x + params.d) / w2);
    const double cross = 2.0 * std::exp(-(sq(x) + sq(params.d)) / w2) * std::cos(fringe_k * x - params.delta);
    // cancellation near destructive points can leave a -1e-17 residue
    return std::max(0.0, params.x0 / width * (slits + cross));
}

WignerField sample_wdf(const SlitPairParams& params, const Grid2D& grid)
{
    validate(params);
    WignerField field(grid);
    for (std::size_t i = 0; i < field.nx(); ++i) {
        const double x = grid.x_axis.point(i);
        for (std::size_t j = 0; j < field.np(); ++j) {
            field.at(i, j) = wdf_propagated_closed_form(params, x, grid.p_axis.point(j));
        }
    }
    return field;
}

WignerField sample_slit_wdf(const SlitPairParams& params, Slit slit, const Grid2D& grid)
{
    validate(params);
    WignerField field(grid);
    for (std::size_t i = 0; i < field.nx(); ++i) {
        const double x = grid.x_axis.point(i);
        for (std::size_t j = 0; j < field.np(); ++j) {
            const double p = grid.p_axis.point(j);
            field.at(i, j) = slit_wdf_closed_form(params, slit, x - params.alpha * p, p);
        }
    }
    return field;
}

MarginalCurve sample_x_marginal(const SlitPairParams& params, const Grid1D& grid)
{
    validate(params);
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        values[i] = x_marginal_propagated_closed_form(params, grid.point(i));
    }
    return MarginalCurve(Axis::position, grid, std::move(values));
}

MarginalCurve sample_p_marginal(const SlitPairParams& params, const Grid1D& grid)
{
    validate(params);
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        values[i] = p_marginal_closed_form(params, grid.point(i));
    }
    return MarginalCurve(Axis::momentum, grid, std::move(values));
}

double delta_from_flux(const FluxSpec& flux)
{
    if (!(flux.phi0 > 0.0)) {
        throw InvalidInput("flux quantum must be positive");
    }
    if (!std::isfinite(flux.phi)) {
        throw InvalidInput("flux must be finite");
    }
    return 2.0 * std::numbers::pi * flux.phi / flux.phi0;
}

PulseSeries::PulseSeries(std::vector<double> times, std::vector<double> values)
    : times_(std::move(times)), values_(std::move(values))
{
    if (times_.size() != values_.size()) {
        throw InvalidInput("pulse series: times and values differ in length");
    }
    if (times_.size() < 2) {
        throw InvalidInput("pulse series needs at least 2 samples");
    }
    for (std::size_t i = 0; i < times_.size(); ++i) {
        if (!std::isfinite(times_[i]) || !std::isfinite(values_[i])) {
            throw InvalidInput("pulse series contains a non-finite sample");
        }
        if (i > 0 && !(times_[i] > times_[i - 1])) {
            throw InvalidInput("pulse series times must be strictly ascending");
        }
    }
}

double PulseSeries::integral() const
{
    return trapezoid(times_, values_);
}

double delta_scalar_electric(const PulseSeries& path1, const PulseSeries& path2, double e_over_hbar)
{
    return e_over_hbar * (path1.integral() - path2.integral());
}

double delta_scalar_neutron(const PulseSeries& path1, const PulseSeries& path2, double inv_hbar)
{
    return inv_hbar * (path1.integral() - path2.integral());
}

} // namespace wignerab::analytic
