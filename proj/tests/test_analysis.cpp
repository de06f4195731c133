#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "wignerab/analysis.hpp"
#include "wignerab/analytic.hpp"
#include "wignerab/errors.hpp"

using namespace wignerab;
using namespace wignerab::analysis;

namespace {

constexpr double kPi = std::numbers::pi;
const Grid1D kP(-4.0, 4.0, 512);
const Grid1D kX(-12.0, 12.0, 512);

MarginalCurve p_curve(double delta)
{
    return analytic::sample_p_marginal(normalized_params(0.0, delta), kP);
}

MarginalCurve x_curve(double delta, double alpha = 6.0)
{
    return analytic::sample_x_marginal(normalized_params(alpha, delta), kX);
}

// argmax of the closed-form p-marginal on a 1e-6 grid around `guess`
double refined_argmax(double delta, double guess)
{
    const auto params = normalized_params(0.0, delta);
    double best = -1.0;
    double where = guess;
    for (int i = -150000; i <= 150000; ++i) {
        const double p = guess + i * 1e-6;
        const double v = analytic::p_marginal_closed_form(params, p);
        if (v > best) {
            best = v;
            where = p;
        }
    }
    return where;
}

} // namespace

TEST(FindFringeMaxima, MomentumMarginalPeaks)
{
    const auto maxima = find_fringe_maxima(p_curve(0.0), 0.01);
    ASSERT_EQ(maxima.size(), 7u);
    for (int k = -3; k <= 3; ++k) {
        // the Gaussian envelope pulls each peak inward from k pi / 5
        const double expected = refined_argmax(0.0, k * kPi / 5.0);
        EXPECT_NEAR(maxima[k + 3], expected, 1e-3) << "k=" << k;
    }
    EXPECT_NEAR(maxima[3], 0.0, 1e-12);
}

TEST(FindFringeMaxima, ConstantCurveHasNoMaxima)
{
    const MarginalCurve flat(Axis::position, Grid1D(0.0, 1.0, 50), std::vector<double>(50, 2.5));
    EXPECT_TRUE(find_fringe_maxima(flat, 0.0).empty());
    EXPECT_TRUE(find_fringe_maxima(flat, 0.5).empty());
}

TEST(FindFringeMaxima, SingleGaussianCentre)
{
    const Grid1D g(-5.0, 5.0, 1001);
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        v[i] = std::exp(-std::pow(g.point(i) - 0.1234, 2));
    }
    const auto maxima = find_fringe_maxima(MarginalCurve(Axis::position, g, v), 0.1);
    ASSERT_EQ(maxima.size(), 1u);
    EXPECT_NEAR(maxima[0], 0.1234, 1e-6);
}

TEST(FindFringeMaxima, ProminenceFiltersRipples)
{
    const Grid1D g(0.0, 10.0, 1001);
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = g.point(i);
        v[i] = 1.0 + std::exp(-std::pow(x - 5.0, 2)) + 0.001 * std::cos(20.0 * x);
    }
    const MarginalCurve curve(Axis::position, g, v);
    EXPECT_GT(find_fringe_maxima(curve, 0.0).size(), 10u);
    EXPECT_EQ(find_fringe_maxima(curve, 0.1).size(), 1u);
}

TEST(FindLocalMinima, ZerosOfTheMomentumMarginal)
{
    const auto curve = p_curve(0.0);
    const auto minima = find_local_minima(curve.values, curve.grid, 0.01);
    ASSERT_FALSE(minima.empty());
    bool plus = false;
    bool minus = false;
    for (double m : minima) {
        plus = plus || std::abs(m - kPi / 10) < kP.spacing();
        minus = minus || std::abs(m + kPi / 10) < kP.spacing();
    }
    EXPECT_TRUE(plus);
    EXPECT_TRUE(minus);
}

TEST(FringeShift, SelfComparisonIsZero)
{
    EXPECT_NEAR(fringe_shift(p_curve(1.3), p_curve(1.3)), 0.0, 1e-9);
    EXPECT_NEAR(fringe_shift(x_curve(4.0), x_curve(4.0)), 0.0, 1e-9);
}

TEST(FringeShift, MomentumFringesMoveByHalfPhaseOverD)
{
    EXPECT_NEAR(fringe_shift(p_curve(4.0), p_curve(0.0)), 0.4, 2e-3);
}

TEST(FringeShift, PositionFringesAfterFreeFlight)
{
    // delta x0^2 Delta^2 / (2 alpha d hbar) with Delta^2 = 37
    EXPECT_NEAR(fringe_shift(x_curve(4.0), x_curve(0.0)), 4.0 * 37.0 / 60.0, 2e-2);
}

TEST(FringeShift, LinearInDeltaOverHalfTurn)
{
    const auto reference = p_curve(0.0);
    for (double delta : {0.0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi * 0.999}) {
        EXPECT_NEAR(fringe_shift(p_curve(delta), reference), delta / 10.0, 2e-3) << delta;
    }
}

TEST(FringeShift, PeriodicInDelta)
{
    for (double delta : {0.0, 0.3, 4.0}) {
        EXPECT_NEAR(fringe_shift(p_curve(delta + 2 * kPi), p_curve(delta)), 0.0, 1e-6);
        EXPECT_NEAR(fringe_shift(x_curve(delta + 2 * kPi), x_curve(delta)), 0.0, 1e-6);
    }
}

TEST(FringeShift, Errors)
{
    EXPECT_THROW(fringe_shift(p_curve(0.0), x_curve(0.0)), InvalidInput);
    const MarginalCurve flat(Axis::momentum, kP, std::vector<double>(kP.size(), 1.0));
    EXPECT_THROW(fringe_shift(flat, p_curve(0.0)), AnalysisError);
    EXPECT_THROW(fringe_shift(p_curve(0.0), flat), AnalysisError);
}

TEST(FringePeriod, MomentumMarginal)
{
    EXPECT_NEAR(fringe_period(p_curve(0.0)), kPi / 5.0, 1e-3);
    EXPECT_NEAR(fringe_period(p_curve(4.0)), kPi / 5.0, 1e-3);
}

TEST(FringePeriod, PositionMarginalAfterFreeFlight)
{
    EXPECT_NEAR(fringe_period(x_curve(0.0)), 37.0 * kPi / 30.0, 2e-2);
}

TEST(FringePeriod, NeedsThreeMaxima)
{
    const Grid1D g(0.0, 10.0, 1001);
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = g.point(i);
        v[i] = std::exp(-std::pow(x - 3.0, 2)) + std::exp(-std::pow(x - 7.0, 2));
    }
    EXPECT_THROW(fringe_period(MarginalCurve(Axis::position, g, v)), AnalysisError);
}

namespace {

const Grid2D kField{Grid1D(-12.0, 12.0, 241), Grid1D(-6.0, 6.0, 241)};

WignerField slit(analytic::Slit which, double alpha, double delta = 0.0)
{
    return analytic::sample_slit_wdf(normalized_params(alpha, delta), which, kField);
}

} // namespace

TEST(CommonProjection, SlitsAreDisjointInPositionBeforeFlight)
{
    const auto up = slit(analytic::Slit::upper, 0.0);
    const auto down = slit(analytic::Slit::lower, 0.0);
    EXPECT_FALSE(common_projection_interval(up, down, Axis::position, std::exp(-9.0)).has_value());
}

TEST(CommonProjection, SlitsShareTheMomentumRange)
{
    const auto up = slit(analytic::Slit::upper, 0.0);
    const auto down = slit(analytic::Slit::lower, 0.0);
    const auto interval = common_projection_interval(up, down, Axis::momentum, std::exp(-9.0));
    ASSERT_TRUE(interval.has_value());
    EXPECT_NEAR(interval->first, -3.0, kField.p_axis.spacing());
    EXPECT_NEAR(interval->second, 3.0, kField.p_axis.spacing());
}

TEST(CommonProjection, SelfIntersectionIsOwnSupport)
{
    const auto up = slit(analytic::Slit::upper, 0.0);
    const auto interval = common_projection_interval(up, up, Axis::position, std::exp(-9.0));
    ASSERT_TRUE(interval.has_value());
    EXPECT_NEAR(interval->first, 2.0, kField.x_axis.spacing());
    EXPECT_NEAR(interval->second, 8.0, kField.x_axis.spacing());
}

TEST(CommonProjection, IndependentOfDelta)
{
    for (Axis axis : {Axis::position, Axis::momentum}) {
        const auto a = common_projection_interval(slit(analytic::Slit::upper, 6.0, 0.0),
                                                  slit(analytic::Slit::lower, 6.0, 0.0), axis, 1e-3);
        const auto b = common_projection_interval(slit(analytic::Slit::upper, 6.0, 4.0),
                                                  slit(analytic::Slit::lower, 6.0, 4.0), axis, 1e-3);
        EXPECT_EQ(a, b);
    }
}

TEST(CommonProjection, FreeFlightOpensThePositionPattern)
{
    EXPECT_FALSE(common_projection_interval(slit(analytic::Slit::upper, 0.0), slit(analytic::Slit::lower, 0.0),
                                            Axis::position, 1e-3)
                     .has_value());
    const auto opened = common_projection_interval(slit(analytic::Slit::upper, 6.0), slit(analytic::Slit::lower, 6.0),
                                                   Axis::position, 1e-3);
    ASSERT_TRUE(opened.has_value());
    EXPECT_LT(opened->first, 0.0);
    EXPECT_GT(opened->second, 0.0);
}

TEST(CommonProjection, RejectsBadThresholdAndGrids)
{
    const auto up = slit(analytic::Slit::upper, 0.0);
    EXPECT_THROW(common_projection_interval(up, up, Axis::position, 0.0), InvalidInput);
    EXPECT_THROW(common_projection_interval(up, up, Axis::position, 1.0), InvalidInput);
    const WignerField other(Grid2D{Grid1D(-1.0, 1.0, 5), Grid1D(-1.0, 1.0, 5)});
    EXPECT_THROW(common_projection_interval(up, other, Axis::position, 0.5), InvalidInput);
}
