#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wignerab/analytic.hpp"
#include "wignerab/errors.hpp"
#include "wignerab/numeric.hpp"
#include "wignerab/quadrature.hpp"

using namespace wignerab;
using namespace wignerab::numeric;

namespace {

constexpr double kPi = std::numbers::pi;

// x spacing 0.05 and p spacing 0.05, both containing 0
const Grid1D kX(-12.0, 12.0, 481);
const Grid1D kP(-4.0, 4.0, 161);

// wide grid for free flight over alpha = 6; spacing 96/2048 is exact in binary
const Grid1D kWide(-48.0, 48.0, 2049);

double max_abs_diff(const WignerField& a, const WignerField& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i) {
        m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
    }
    return m;
}

} // namespace

TEST(SampleWavefunction, PointValues)
{
    const auto psi = sample_wavefunction(normalized_params(), kX);
    const auto at = [&](double x) { return psi.values[kX.index_of(x)]; };
    EXPECT_NEAR(at(5.0).real(), 1.0 + std::exp(-50.0), 1e-15);
    EXPECT_NEAR(at(0.0).real(), 7.45330634415734e-6, 1e-18);
    EXPECT_NEAR(at(0.0).imag(), 0.0, 1e-20);

    const auto cancel = sample_wavefunction(normalized_params(0.0, kPi), kX);
    EXPECT_LT(std::abs(cancel.values[kX.index_of(0.0)]), 1e-20);
}

TEST(SampleWavefunction, SingleSlitsAddUpToPair)
{
    const auto params = normalized_params(0.0, 2.3);
    const auto pair = sample_wavefunction(params, kX);
    const auto up = sample_single_slit(params, analytic::Slit::upper, kX);
    const auto down = sample_single_slit(params, analytic::Slit::lower, kX);
    for (std::size_t i = 0; i < kX.size(); ++i) {
        EXPECT_NEAR(std::abs(pair.values[i] - up.values[i] - down.values[i]), 0.0, 1e-15);
    }
}

TEST(MomentumWavefunction, Examples)
{
    const Grid1D p_grid(-kPi / 10, kPi / 10, 3);
    const auto flat = momentum_wavefunction(sample_wavefunction(normalized_params(), kX), p_grid, 1.0);
    // the Gaussian tails beyond |x| = 12 are cut off at the 1e-11 level
    EXPECT_NEAR(flat[1].real(), 2.0 * std::sqrt(2.0 * kPi), 1e-10);
    EXPECT_NEAR(flat[1].imag(), 0.0, 1e-12);
    EXPECT_LT(std::abs(flat[0]), 1e-10);
    EXPECT_LT(std::abs(flat[2]), 1e-10);

    const auto shifted = momentum_wavefunction(sample_wavefunction(normalized_params(0.0, 4.0), kX), p_grid, 1.0);
    EXPECT_NEAR(shifted[1].real(), -2.08625085377463, 1e-10);
}

TEST(MomentumWavefunction, MatchesDirectIntegral)
{
    for (double delta : {0.0, 4.0}) {
        const oracle::Pair pair{.delta = delta};
        const auto phibar = momentum_wavefunction(sample_wavefunction(normalized_params(0.0, delta), kX), kP, 1.0);
        for (std::size_t j = 0; j < kP.size(); j += 7) {
            EXPECT_LT(std::abs(phibar[j] - pair.momentum(kP.point(j))), 1e-10 * 5.0132565) << kP.point(j);
        }
    }
}

TEST(MomentumWavefunction, KernelSignMovesPeakToPositiveMomentum)
{
    const Grid1D p_grid(-0.4, 0.4, 3);
    const auto density = momentum_density(sample_wavefunction(normalized_params(0.0, 4.0), kX), p_grid, 1.0);
        // cos^2(5p - 2): 1 at p = 0.4, 0.43 at p = -0.4
    EXPECT_GT(density.values[2], 2.0 * density.values[0]);
}

TEST(MomentumWavefunction, RejectsUndecayedEdges)
{
    const Grid1D narrow(-6.0, 6.0, 241);
    EXPECT_THROW(momentum_wavefunction(sample_wavefunction(normalized_params(), narrow), kP, 1.0), TruncationError);
    NumericOptions loose;
    loose.truncation_guard = 0.9;
    EXPECT_NO_THROW(momentum_wavefunction(sample_wavefunction(normalized_params(), narrow), kP, 1.0, loose));
}

TEST(WignerNumeric, PointValues)
{
    const auto w0 = wigner_numeric(sample_wavefunction(normalized_params(), kX), kP, 1.0);
    EXPECT_NEAR(w0.at(kX.index_of(0.0), kP.index_of(0.0)), 7.08981540372053, 1e-9);
    const auto w4 = wigner_numeric(sample_wavefunction(normalized_params(0.0, 4.0), kX), kP, 1.0);
    EXPECT_NEAR(w4.at(kX.index_of(0.0), kP.index_of(0.0)), -4.63421261157967, 1e-9);
}

TEST(WignerNumeric, SingleGaussianIsPositiveAndMatchesClosedForm)
{
    std::vector<Complex> values(kX.size());
    for (std::size_t i = 0; i < kX.size(); ++i) {
        values[i] = std::exp(-kX.point(i) * kX.point(i) / 2.0);
    }
    const auto w = wigner_numeric(SampledWavefunction(kX, values), kP, 1.0);
    const double peak = w.max_abs();
    for (std::size_t i = 0; i < w.nx(); ++i) {
        for (std::size_t j = 0; j < w.np(); ++j) {
            const double x = kX.point(i);
            const double p = kP.point(j);
            const double expected = 2.0 * std::sqrt(kPi) * std::exp(-x * x) * std::exp(-p * p);
            ASSERT_GE(w.at(i, j), -1e-12 * peak);
            ASSERT_NEAR(w.at(i, j), expected, 1e-10 * peak);
        }
    }
}

TEST(WignerNumeric, AgreesWithClosedForm)
{
    for (double delta : {0.0, 4.0, 2 * kPi + 4.0}) {
        const auto params = normalized_params(0.0, delta);
        const auto numeric = wigner_numeric(sample_wavefunction(params, kX), kP, 1.0);
        const auto exact = analytic::sample_wdf(params, Grid2D{kX, kP});
        EXPECT_LE(max_abs_diff(numeric, exact), 1e-6 * exact.max_abs()) << "delta=" << delta;
    }
}

TEST(WignerNumeric, ImaginaryResidueIsRoundoff)
{
    const auto psi = sample_wavefunction(normalized_params(0.0, 4.0), kX);
    const auto result = wigner_transform(psi, kP, 1.0, 0, kX.size());
    EXPECT_LT(result.imag_residue, 1e-10);
}

TEST(WignerNumeric, EnforcesLagLatticeMomentumLimit)
{
    const double limit = max_wigner_momentum(kX, 1.0);
    EXPECT_NEAR(limit, kPi / 0.1, 1e-12);
    const auto psi = sample_wavefunction(normalized_params(), kX);
    EXPECT_THROW(wigner_numeric(psi, Grid1D(-limit * 1.01, limit, 11), 1.0), InvalidInput);
    EXPECT_NO_THROW(wigner_numeric(psi, Grid1D(-limit, limit, 11), 1.0));
}

TEST(WignerNumeric, RowWindowMatchesFullTransform)
{
    const auto psi = sample_wavefunction(normalized_params(0.0, 1.0), kX);
    const auto full = wigner_numeric(psi, kP, 1.0);
    const auto part = wigner_transform(psi, kP, 1.0, 100, 50);
    for (std::size_t i = 0; i < 50; ++i) {
        for (std::size_t j = 0; j < kP.size(); ++j) {
            ASSERT_EQ(part.field.at(i, j), full.at(100 + i, j));
        }
    }
}

TEST(WignerNumeric, ThreadCountDoesNotChangeBits)
{
    const auto psi = sample_wavefunction(normalized_params(0.0, 4.0), kX);
    NumericOptions many;
    many.threads = 4;
    EXPECT_EQ(wigner_numeric(psi, kP, 1.0).values(), wigner_numeric(psi, kP, 1.0, many).values());
}

TEST(WignerNumeric, TotalMassMatchesNorm)
{
    const Grid1D p_wide(-7.0, 7.0, 281);
    for (double delta : {0.0, 4.0}) {
        const auto psi = sample_wavefunction(normalized_params(0.0, delta), kX);
        const auto w = wigner_numeric(psi, p_wide, 1.0);
        auto [xm, pm] = marginals_from_wdf(w, 1.0);
        const double mass = trapezoid(xm.values, kX.spacing());
        const double norm = trapezoid(position_density(psi).values, kX.spacing());
        EXPECT_NEAR(mass, norm, 1e-8 * norm);
        // closed form of Int |phi|^2 dx for the unnormalized pair
        EXPECT_NEAR(norm, 2.0 * std::sqrt(kPi) * (1.0 + std::exp(-25.0) * std::cos(delta)), 1e-12);
    }
}

TEST(WignerNumeric, InterferenceTermLivesBetweenTheSlits)
{
    const auto params = normalized_params(0.0, 4.0);
    const auto pair = wigner_numeric(sample_wavefunction(params, kX), kP, 1.0);
    const auto up = wigner_numeric(sample_single_slit(params, analytic::Slit::upper, kX), kP, 1.0);
    const auto down = wigner_numeric(sample_single_slit(params, analytic::Slit::lower, kX), kP, 1.0);
    const double peak = pair.max_abs();
    for (std::size_t i = 0; i < pair.nx(); ++i) {
        if (std::abs(kX.point(i)) <= 5.0) {
            continue;
        }
        for (std::size_t j = 0; j < pair.np(); ++j) {
            ASSERT_LE(std::abs(pair.at(i, j) - up.at(i, j) - down.at(i, j)), 1e-9 * peak);
        }
    }
}

TEST(PropagateFree, ZeroAlphaIsIdentity)
{
    const auto psi = sample_wavefunction(normalized_params(0.0, 1.0), kX);
    const auto out = propagate_free(psi, 0.0, 1.0);
    for (std::size_t i = 0; i < kX.size(); ++i) {
        EXPECT_LE(std::abs(out.values[i] - psi.values[i]), 1e-12);
    }
}

TEST(PropagateFree, DensityMatchesClosedForm)
{
    for (double delta : {0.0, 4.0}) {
        const auto params = normalized_params(6.0, delta);
        const auto out = propagate_free(sample_wavefunction(params, kWide), 6.0, 1.0);
        EXPECT_NEAR(std::norm(out.values[kWide.index_of(0.0)]),
                    delta == 0.0 ? 0.334593046934181 : 0.0579442181101673, 1e-10);
        for (double x : {-7.5, -2.0, 1.40625, 2.484375, 9.0}) {
            EXPECT_NEAR(std::norm(out.values[kWide.index_of(x)]),
                        analytic::x_marginal_propagated_closed_form(params, kWide.point(kWide.index_of(x))), 1e-10)
                << "x=" << x << " delta=" << delta;
        }
    }
}

TEST(PropagateFree, MomentumDensityIsInvariant)
{
    const auto params = normalized_params(6.0, 4.0);
    const auto psi = sample_wavefunction(params, kWide);
    const auto before = momentum_density(psi, kP, 1.0);
    const auto after = momentum_density(propagate_free(psi, 6.0, 1.0), kP, 1.0);
    const double peak = *std::max_element(before.values.begin(), before.values.end());
    for (std::size_t j = 0; j < kP.size(); ++j) {
        if (before.values[j] < 1e-6 * peak) {
            continue;
        }
        EXPECT_NEAR(after.values[j], before.values[j], 1e-8 * before.values[j]) << kP.point(j);
    }
}

TEST(PropagateFree, RejectsPacketReachingTheEdge)
{
    const auto psi = sample_wavefunction(normalized_params(6.0), kX);
    EXPECT_THROW(propagate_free(psi, 6.0, 1.0), TruncationError);
}

TEST(PropagateFree, DecayHalfWidthIsSufficient)
{
    const auto params = normalized_params(6.0);
    const double half = decay_half_width(params, 1e-12);
    EXPECT_LT(analytic::x_marginal_propagated_closed_form(params, half),
              1e-12 * analytic::x_marginal_propagated_closed_form(params, 0.0));
    EXPECT_LT(half, 48.0);
}

TEST(ShearWdf, IdentityAndFixedRow)
{
    const auto field = analytic::sample_wdf(normalized_params(0.0, 4.0), Grid2D{kX, kP});
    EXPECT_EQ(shear_wdf(field, 0.0).values(), field.values());
    const auto sheared = shear_wdf(field, 6.0);
    const std::size_t zero = kP.index_of(0.0);
    for (std::size_t i = 0; i < kX.size(); ++i) {
        EXPECT_NEAR(sheared.at(i, zero), field.at(i, zero), 1e-12 * field.max_abs());
    }
}

TEST(ShearWdf, ZeroFillsOutsideTheGrid)
{
    const Grid2D grid{Grid1D(0.0, 1.0, 11), Grid1D(-1.0, 1.0, 3)};
    WignerField ones(grid, std::vector<double>(33, 1.0));
    const auto out = shear_wdf(ones, 0.5);
    // p = +1 samples x - 0.5: first five x points fall off the left edge
    EXPECT_EQ(out.at(0, 2), 0.0);
    EXPECT_EQ(out.at(4, 2), 0.0);
    EXPECT_DOUBLE_EQ(out.at(5, 2), 1.0);
    EXPECT_DOUBLE_EQ(out.at(10, 2), 1.0);
    EXPECT_EQ(out.at(10, 0), 0.0);
}

TEST(ShearWdf, MatchesPropagatedClosedForm)
{
    const auto z0 = analytic::sample_wdf(normalized_params(0.0, 4.0), Grid2D{kX, kP});
    const auto exact = analytic::sample_wdf(normalized_params(6.0, 4.0), Grid2D{kX, kP});
    EXPECT_LE(max_abs_diff(shear_wdf(z0, 6.0), exact), 1e-3 * z0.max_abs());
}

TEST(MarginalsFromWdf, Examples)
{
    const auto w = wigner_numeric(sample_wavefunction(normalized_params(), kX), Grid1D(-7.0, 7.0, 281), 1.0);
    auto [xm, pm] = marginals_from_wdf(w, 1.0);
    EXPECT_NEAR(xm.values[kX.index_of(5.0)], 1.0, 1e-8);
    EXPECT_NEAR(pm.values[140], 8.0 * kPi, 1e-8);

    const WignerField zero(Grid2D{kX, kP});
    auto [zx, zp] = marginals_from_wdf(zero, 1.0);
    for (double v : zx.values) {
        EXPECT_EQ(v, 0.0);
    }
    for (double v : zp.values) {
        EXPECT_EQ(v, 0.0);
    }
}

TEST(MarginalsFromWdf, SignificantNegativeIsAConventionError)
{
    const Grid2D grid{Grid1D(0.0, 1.0, 3), Grid1D(0.0, 1.0, 3)};
    WignerField field(grid, {1, 1, 1, -5, -5, -5, 1, 1, 1});
    EXPECT_THROW(marginals_from_wdf(field, 1.0), ConventionError);
}
