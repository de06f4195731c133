#pragma once

#include <vector>

#include "wignerab/model.hpp"

// Closed-form phase-space results for the Gaussian slit pair.
//
// Conventions: the Wigner transform is
//   W(x, p) = Int phi*(x - s/2) phi(x + s/2) exp(+i p s / hbar) ds
// and the momentum amplitude is phibar(p) = Int phi(x) exp(+i x p / hbar) dx,
// so that |phi(x)|^2 = (1/2 pi hbar) Int W dp and |phibar(p)|^2 = Int W dx.
// Free flight over alpha = t/m shears the field: W(x, p) -> W(x - alpha p, p).
namespace wignerab::analytic {

enum class Slit { upper, lower }; // centred at +d and -d respectively

/// Wigner function of the slit pair right after the slits (alpha ignored).
double wdf_closed_form(const SlitPairParams& params, double x, double p);

/// Wigner function after free flight: wdf_closed_form at (x - alpha p, p).
double wdf_propagated_closed_form(const SlitPairParams& params, double x, double p);

/// Wigner function of one slit alone, before propagation. Independent of delta.
double slit_wdf_closed_form(const SlitPairParams& params, Slit slit, double x, double p);

/// |phibar(p)|^2 = 8 pi x0^2 exp(-p^2 x0^2 / hbar^2) cos^2(p d / hbar - delta / 2).
/// Unchanged by free flight.
double p_marginal_closed_form(const SlitPairParams& params, double p);

/// |phi(x)|^2 after free flight over alpha (reduces to the z = 0 density at alpha = 0).
double x_marginal_propagated_closed_form(const SlitPairParams& params, double x);

/// Samples wdf_propagated_closed_form (or wdf_closed_form when alpha == 0).
WignerField sample_wdf(const SlitPairParams& params, const Grid2D& grid);

/// Samples the single-slit field, sheared by params.alpha.
WignerField sample_slit_wdf(const SlitPairParams& params, Slit slit, const Grid2D& grid);

MarginalCurve sample_x_marginal(const SlitPairParams& params, const Grid1D& grid);
MarginalCurve sample_p_marginal(const SlitPairParams& params, const Grid1D& grid);

// ---------------------------------------------------------------------------
// Phase-shift conversions

struct FluxSpec {
    double phi = 0.0;  // enclosed flux
    double phi0 = 1.0; // flux quantum hc/e, same units
};

/// 2 pi phi / phi0. Throws InvalidInput when phi0 <= 0.
double delta_from_flux(const FluxSpec& flux);

/// Sampled pulse U(t) (volts) or mu.B(t) (energy) along one path.
class PulseSeries {
public:
    PulseSeries(std::vector<double> times, std::vector<double> values);

    const std::vector<double>& times() const noexcept { return times_; }
    const std::vector<double>& values() const noexcept { return values_; }

    /// Trapezoid integral over the samples.
    double integral() const;

private:
    std::vector<double> times_;
    std::vector<double> values_;
};

/// e_over_hbar * (Int U1 dt - Int U2 dt): scalar AB phase for electrons.
double delta_scalar_electric(const PulseSeries& path1, const PulseSeries& path2, double e_over_hbar);

/// inv_hbar * (Int mu.B1 dt - Int mu.B2 dt): scalar AB phase for neutrons.
double delta_scalar_neutron(const PulseSeries& path1, const PulseSeries& path2, double inv_hbar);

} // namespace wignerab::analytic
