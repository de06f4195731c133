#include "wignerab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <thread>

#include "wignerab/errors.hpp"
#include "wignerab/quadrature.hpp"

namespace wignerab::numeric {

namespace {

double sq(double v) { return v * v; }

// Splits [0, count) into contiguous chunks. Each index is processed exactly
// once by a single thread, so per-index results do not depend on `threads`.
template <typename Fn>
void parallel_rows(std::size_t count, unsigned threads, Fn&& fn)
{
    const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) {
            break;
        }
        pool.emplace_back([begin, end, &fn] {
            for (std::size_t i = begin; i < end; ++i) {
                fn(i);
            }
        });
    }
}

Complex slit_term(const SlitPairParams& params, double centre, double phase, double x)
{
    return std::polar(std::exp(-sq(x - centre) / (2.0 * sq(params.x0))), phase);
}

void check_hbar(double hbar)
{
    if (!(hbar > 0.0) || !std::isfinite(hbar)) {
        throw InvalidInput("hbar must be positive and finite");
    }
}

} // namespace

SampledWavefunction sample_wavefunction(const SlitPairParams& params, const Grid1D& grid)
{
    validate(params);
    std::vector<Complex> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.point(i);
        values[i] = slit_term(params, params.d, -0.5 * params.delta, x)
                    + slit_term(params, -params.d, 0.5 * params.delta, x);
    }
    return SampledWavefunction(grid, std::move(values));
}

SampledWavefunction sample_single_slit(const SlitPairParams& params, analytic::Slit slit, const Grid1D& grid)
{
    validate(params);
    const bool upper = slit == analytic::Slit::upper;
    const double centre = upper ? params.d : -params.d;
    const double phase = upper ? -0.5 * params.delta : 0.5 * params.delta;
    std::vector<Complex> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        values[i] = slit_term(params, centre, phase, grid.point(i));
    }
    return SampledWavefunction(grid, std::move(values));
}

void check_decay(const SampledWavefunction& psi, double guard, const char* what)
{
    double peak = 0.0;
    for (const Complex& v : psi.values) {
        peak = std::max(peak, std::norm(v));
    }
    if (peak == 0.0) {
        return;
    }
    const double edge = std::max(std::norm(psi.values.front()), std::norm(psi.values.back()));
    if (edge > guard * peak) {
        throw TruncationError(std::string(what) + ": |psi|^2 at the grid edge is " + std::to_string(edge / peak)
                              + " of its peak (guard " + std::to_string(guard) + "); widen the x grid");
    }
}

std::vector<Complex> momentum_wavefunction(const SampledWavefunction& psi, const Grid1D& p_grid, double hbar,
                                           const NumericOptions& options)
{
    check_hbar(hbar);
    check_decay(psi, options.truncation_guard, "momentum_wavefunction");
    const Grid1D& xg = psi.grid;
    const std::size_t n = xg.size();
    std::vector<Complex> out(p_grid.size());
    parallel_rows(p_grid.size(), options.threads, [&](std::size_t j) {
        const double k = p_grid.point(j) / hbar;
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
            acc += w * psi.values[i] * std::polar(1.0, k * xg.point(i));
        }
        out[j] = acc * xg.spacing();
    });
    return out;
}

double max_wigner_momentum(const Grid1D& x_grid, double hbar)
{
    return std::numbers::pi * hbar / (2.0 * x_grid.spacing());
}

WignerComputation wigner_transform(const SampledWavefunction& psi, const Grid1D& p_grid, double hbar,
                                   std::size_t first_row, std::size_t row_count, const NumericOptions& options)
{
    check_hbar(hbar);
    const Grid1D& xg = psi.grid;
    const std::size_t n = xg.size();
    if (first_row + row_count > n) {
        throw InvalidInput("wigner_transform: row range outside the wavefunction grid");
    }
    if (row_count < 2) {
        throw InvalidInput("wigner_transform: at least 2 rows are required");
    }
    const double p_limit = max_wigner_momentum(xg, hbar);
    if (std::max(std::abs(p_grid.min()), std::abs(p_grid.max())) > p_limit * (1.0 + 1e-12)) {
        throw InvalidInput("momentum grid exceeds the lag-lattice limit |p| <= " + std::to_string(p_limit));
    }
    check_decay(psi, options.truncation_guard, "wigner_numeric");

    // kernel[j][k] = exp(+i p_j (2 k dx) / hbar) for k >= 0; negative lags use the conjugate
    const std::size_t max_lag = (n - 1) / 2;
    const std::size_t np = p_grid.size();
    const std::size_t stride = max_lag + 1;
    std::vector<double> kre(np * stride);
    std::vector<double> kim(np * stride);
    for (std::size_t j = 0; j < np; ++j) {
        const double step = 2.0 * xg.spacing() * p_grid.point(j) / hbar;
        for (std::size_t k = 0; k <= max_lag; ++k) {
            const double angle = step * static_cast<double>(k);
            kre[j * stride + k] = std::cos(angle);
            kim[j * stride + k] = std::sin(angle);
        }
    }

    const Grid1D row_axis(xg.point(first_row), xg.point(first_row + row_count - 1), row_count);
    WignerField field(Grid2D{row_axis, p_grid});
    std::vector<double> residue(row_count, 0.0);
    const double weight = 2.0 * xg.spacing();

    parallel_rows(row_count, options.threads, [&](std::size_t r) {
        const std::size_t i = first_row + r;
        const std::size_t lags = std::min(i, n - 1 - i);
        // lag products g(+k) and g(-k) = psi*(x -+ k dx) psi(x +- k dx)
        std::vector<double> gp_re(lags + 1), gp_im(lags + 1), gm_re(lags + 1), gm_im(lags + 1);
        for (std::size_t k = 0; k <= lags; ++k) {
            const Complex plus = std::conj(psi.values[i - k]) * psi.values[i + k];
            const Complex minus = std::conj(psi.values[i + k]) * psi.values[i - k];
            gp_re[k] = plus.real();
            gp_im[k] = plus.imag();
            gm_re[k] = minus.real();
            gm_im[k] = minus.imag();
        }
        double worst_imag = 0.0;
        for (std::size_t j = 0; j < np; ++j) {
            const double* cr = &kre[j * stride];
            const double* ci = &kim[j * stride];
            double re = gp_re[0];
            double im = gp_im[0];
            for (std::size_t k = 1; k <= lags; ++k) {
                // g(k) e^{+i t k} + g(-k) e^{-i t k}
                re += gp_re[k] * cr[k] - gp_im[k] * ci[k];
                im += gp_re[k] * ci[k] + gp_im[k] * cr[k];
                re += gm_re[k] * cr[k] + gm_im[k] * ci[k];
                im += gm_im[k] * cr[k] - gm_re[k] * ci[k];
            }
            field.at(r, j) = weight * re;
            worst_imag = std::max(worst_imag, std::abs(weight * im));
        }
        residue[r] = worst_imag;
    });

    const double peak = field.max_abs();
    const double worst = *std::max_element(residue.begin(), residue.end());
    return WignerComputation{std::move(field), peak > 0.0 ? worst / peak : worst};
}

WignerField wigner_numeric(const SampledWavefunction& psi, const Grid1D& p_grid, double hbar,
                           const NumericOptions& options)
{
    auto result = wigner_transform(psi, p_grid, hbar, 0, psi.grid.size(), options);
    if (result.imag_residue > options.realness_tolerance) {
        throw ConventionError("Wigner transform has an imaginary residue of " + std::to_string(result.imag_residue)
                              + " of its peak; the lag product or kernel sign is inconsistent");
    }
    return std::move(result.field);
}

SampledWavefunction propagate_free(const SampledWavefunction& psi, double alpha, double hbar,
                                   const NumericOptions& options)
{
    check_hbar(hbar);
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw InvalidInput("alpha must be non-negative and finite");
    }
    check_decay(psi, options.truncation_guard, "propagate_free (input)");
    if (alpha == 0.0) {
        return psi;
    }

    const std::size_t n = psi.grid.size();
    // twiddle[m] = exp(-2 pi i m / n), exact per index
    std::vector<Complex> twiddle(n);
    for (std::size_t m = 0; m < n; ++m) {
        twiddle[m] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
    }

    std::vector<Complex> spectrum(n);
    parallel_rows(n, options.threads, [&](std::size_t m) {
        Complex acc{0.0, 0.0};
        std::size_t idx = 0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += psi.values[j] * twiddle[idx];
            idx += m;
            if (idx >= n) {
                idx -= n;
            }
        }
        // With exp(+i x p / hbar) as the forward kernel, free flight that shears
        // W to W(x - alpha p, p) is exp(+i alpha p^2 / 2 hbar); it is even in p.
        const double signed_m = m < (n + 1) / 2 ? static_cast<double>(m) : static_cast<double>(m) - static_cast<double>(n);
        const double p = 2.0 * std::numbers::pi * hbar * signed_m / (static_cast<double>(n) * psi.grid.spacing());
        spectrum[m] = acc * std::polar(1.0, alpha * p * p / (2.0 * hbar));
    });

    std::vector<Complex> out(n);
    parallel_rows(n, options.threads, [&](std::size_t j) {
        Complex acc{0.0, 0.0};
        std::size_t idx = 0;
        for (std::size_t m = 0; m < n; ++m) {
            acc += spectrum[m] * std::conj(twiddle[idx]);
            idx += j;
            if (idx >= n) {
                idx -= n;
            }
        }
        out[j] = acc / static_cast<double>(n);
    });

    SampledWavefunction result(psi.grid, std::move(out));
    check_decay(result, options.truncation_guard, "propagate_free (output)");
    return result;
}

double decay_half_width(const SlitPairParams& params, double guard)
{
    validate(params);
    if (!(guard > 0.0 && guard < 1.0)) {
        throw InvalidInput("guard must lie in (0, 1)");
    }
    const double width = delta_big(params);
    return params.d + width * (std::sqrt(-std::log(guard)) + 1.0);
}

WignerField shear_wdf(const WignerField& field, double alpha)
{
    if (!std::isfinite(alpha)) {
        throw InvalidInput("shear parameter must be finite");
    }
    if (alpha == 0.0) {
        return field;
    }
    const Grid1D& xg = field.grid().x_axis;
    const Grid1D& pg = field.grid().p_axis;
    const std::size_t nx = field.nx();
    WignerField out(field.grid());
    for (std::size_t j = 0; j < field.np(); ++j) {
        const double offset = alpha * pg.point(j);
        for (std::size_t i = 0; i < nx; ++i) {
            const double t = (xg.point(i) - offset - xg.min()) / xg.spacing();
            if (t < 0.0 || t > static_cast<double>(nx - 1)) {
                continue;
            }
            const auto lo = std::min(static_cast<std::size_t>(t), nx - 2);
            const double frac = t - static_cast<double>(lo);
            out.at(i, j) = (1.0 - frac) * field.at(lo, j) + frac * field.at(lo + 1, j);
        }
    }
    return out;
}

namespace {

std::vector<double> clamp_marginal(std::vector<double> values, const char* what)
{
    double peak = 0.0;
    for (double v : values) {
        peak = std::max(peak, std::abs(v));
    }
    for (double& v : values) {
        if (v < 0.0) {
            if (v < -1e-6 * peak) {
                char ratio[32];
                std::snprintf(ratio, sizeof ratio, "%.3g", v / peak);
                throw ConventionError(std::string(what) + " marginal is significantly negative (" + ratio
                                      + " of peak)");
            }
            v = 0.0;
        }
    }
    return values;
}

} // namespace

std::pair<MarginalCurve, MarginalCurve> marginals_from_wdf(const WignerField& field, double hbar)
{
    check_hbar(hbar);
    const std::size_t nx = field.nx();
    const std::size_t np = field.np();
    const double dx = field.grid().x_axis.spacing();
    const double dp = field.grid().p_axis.spacing();

    std::vector<double> xm(nx);
    for (std::size_t i = 0; i < nx; ++i) {
        xm[i] = trapezoid(std::span<const double>(&field.values()[i * np], np), dp)
                / (2.0 * std::numbers::pi * hbar);
    }
    std::vector<double> pm(np);
    std::vector<double> column(nx);
    for (std::size_t j = 0; j < np; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            column[i] = field.at(i, j);
        }
        pm[j] = trapezoid(column, dx);
    }
    return {MarginalCurve(Axis::position, field.grid().x_axis, clamp_marginal(std::move(xm), "position")),
            MarginalCurve(Axis::momentum, field.grid().p_axis, clamp_marginal(std::move(pm), "momentum"))};
}

MarginalCurve position_density(const SampledWavefunction& psi)
{
    std::vector<double> values(psi.values.size());
    std::transform(psi.values.begin(), psi.values.end(), values.begin(), [](const Complex& v) { return std::norm(v); });
    return MarginalCurve(Axis::position, psi.grid, std::move(values));
}

MarginalCurve momentum_density(const SampledWavefunction& psi, const Grid1D& p_grid, double hbar,
                               const NumericOptions& options)
{
    const auto amplitude = momentum_wavefunction(psi, p_grid, hbar, options);
    std::vector<double> values(amplitude.size());
    std::transform(amplitude.begin(), amplitude.end(), values.begin(), [](const Complex& v) { return std::norm(v); });
    return MarginalCurve(Axis::momentum, p_grid, std::move(values));
}

} // namespace wignerab::numeric
