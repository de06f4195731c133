#pragma once

#include <utility>
#include <vector>

#include "wignerab/analytic.hpp"
#include "wignerab/model.hpp"

// Discrete counterparts of the closed forms: sampled wavefunctions, direct
// quadrature of the momentum amplitude and the Wigner transform, free flight,
// shear, and marginals. Every kernel uses exp(+i p s / hbar).
namespace wignerab::numeric {

struct NumericOptions {
    /// Largest |psi|^2 allowed at either grid endpoint, relative to max |psi|^2.
    double truncation_guard = 1e-12;
    /// Largest imaginary residue of the Wigner sum, relative to max |W|.
    double realness_tolerance = 1e-10;
    /// Worker threads for row-parallel kernels. Results do not depend on it.
    unsigned threads = 1;
};

SampledWavefunction sample_wavefunction(const SlitPairParams& params, const Grid1D& grid);

/// Only one of the two slit terms, including its delta phase.
SampledWavefunction sample_single_slit(const SlitPairParams& params, analytic::Slit slit, const Grid1D& grid);

/// Throws TruncationError when |psi|^2 at an endpoint exceeds guard * max |psi|^2.
void check_decay(const SampledWavefunction& psi, double guard, const char* what);

/// phibar(p) = Int psi(x) exp(+i x p / hbar) dx by the trapezoid rule, evaluated
/// directly at each point of p_grid.
std::vector<Complex> momentum_wavefunction(const SampledWavefunction& psi, const Grid1D& p_grid, double hbar,
                                           const NumericOptions& options = {});

/// Largest |p| resolvable on the lag lattice s = 2 k dx: pi hbar / (2 dx).
double max_wigner_momentum(const Grid1D& x_grid, double hbar);

struct WignerComputation {
    WignerField field;
    /// max |Im W| / max |Re W| before the imaginary part was discarded.
    double imag_residue;
};

/// Wigner transform evaluated at rows [first_row, first_row + row_count) of
/// the wavefunction grid. The lag product psi*(x - k dx) psi(x + k dx) is
/// summed over every k that stays on the grid, with weight 2 dx.
WignerComputation wigner_transform(const SampledWavefunction& psi, const Grid1D& p_grid, double hbar,
                                   std::size_t first_row, std::size_t row_count, const NumericOptions& options = {});

/// Full-grid Wigner transform. Throws ConventionError when the imaginary
/// residue exceeds options.realness_tolerance.
WignerField wigner_numeric(const SampledWavefunction& psi, const Grid1D& p_grid, double hbar,
                           const NumericOptions& options = {});

/// Free flight over alpha = t/m on the same grid, applied as a phase on the
/// discrete momentum amplitude. Its Wigner field is the input field sheared to
/// W(x - alpha p, p).
SampledWavefunction propagate_free(const SampledWavefunction& psi, double alpha, double hbar,
                                   const NumericOptions& options = {});

/// Half-width of an x window outside which the propagated slit pair has
/// density below `guard` of its peak.
double decay_half_width(const SlitPairParams& params, double guard);

/// out(x, p) = in(x - alpha p, p), linear interpolation along x, zero outside.
WignerField shear_wdf(const WignerField& field, double alpha);

/// (|phi(x)|^2, |phibar(p)|^2) from the field: (1/2 pi hbar) Int W dp and Int W dx.
/// Negative values down to -1e-6 of the peak are set to zero; lower ones throw ConventionError.
std::pair<MarginalCurve, MarginalCurve> marginals_from_wdf(const WignerField& field, double hbar);

/// |psi(x)|^2 on the wavefunction grid.
MarginalCurve position_density(const SampledWavefunction& psi);

/// |phibar(p)|^2 on p_grid.
MarginalCurve momentum_density(const SampledWavefunction& psi, const Grid1D& p_grid, double hbar,
                               const NumericOptions& options = {});

} // namespace wignerab::numeric
