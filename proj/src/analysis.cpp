#include "wignerab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "wignerab/errors.hpp"
#include "wignerab/numeric.hpp"

namespace wignerab::analysis {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Height of a peak above the higher of the two lowest points reachable
// without climbing above the peak.
double prominence(std::span<const double> v, std::size_t peak)
{
    const double top = v[peak];
    double left_min = top;
    for (std::size_t i = peak + 1; i-- > 0;) {
        if (v[i] > top) {
            break;
        }
        left_min = std::min(left_min, v[i]);
    }
    double right_min = top;
    for (std::size_t i = peak; i < v.size(); ++i) {
        if (v[i] > top) {
            break;
        }
        right_min = std::min(right_min, v[i]);
    }
    return top - std::max(left_min, right_min);
}

std::vector<double> maxima_of(std::span<const double> v, const Grid1D& grid, double min_prominence)
{
    if (v.size() != grid.size()) {
        throw InvalidInput("curve length does not match its grid");
    }
    if (!(min_prominence >= 0.0)) {
        throw InvalidInput("min_prominence must be non-negative");
    }
    double scale = 0.0;
    for (double x : v) {
        scale = std::max(scale, std::abs(x));
    }
    const double needed = min_prominence * scale;

    std::vector<double> out;
    std::size_t i = 1;
    while (i + 1 < v.size()) {
        if (!(v[i - 1] < v[i])) {
            ++i;
            continue;
        }
        std::size_t ahead = i + 1;
        while (ahead + 1 < v.size() && v[ahead] == v[i]) {
            ++ahead;
        }
        if (v[ahead] < v[i]) {
            const std::size_t right_edge = ahead - 1;
            const double prom = prominence(v, i);
            if (prom > 0.0 && prom >= needed) {
                double position;
                if (right_edge == i) {
                    const double curvature = v[i - 1] - 2.0 * v[i] + v[i + 1];
                    const double offset = curvature != 0.0 ? 0.5 * (v[i - 1] - v[i + 1]) / curvature : 0.0;
                    position = grid.point(i) + offset * grid.spacing();
                } else {
                    position = 0.5 * (grid.point(i) + grid.point(right_edge));
                }
                out.push_back(position);
            }
        }
        i = ahead;
    }
    return out;
}

std::complex<double> hann_spectrum(const MarginalCurve& curve, double k)
{
    const std::size_t n = curve.values.size();
    const double centre = 0.5 * (curve.grid.min() + curve.grid.max());
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const double w = 0.5 * (1.0 - std::cos(kTwoPi * static_cast<double>(i) / static_cast<double>(n - 1)));
        acc += w * curve.values[i] * std::polar(1.0, -k * (curve.grid.point(i) - centre));
    }
    return acc;
}

double median_spacing(const std::vector<double>& maxima)
{
    std::vector<double> gaps(maxima.size() - 1);
    for (std::size_t i = 1; i < maxima.size(); ++i) {
        gaps[i - 1] = maxima[i] - maxima[i - 1];
    }
    std::sort(gaps.begin(), gaps.end());
    const std::size_t m = gaps.size();
    return m % 2 == 1 ? gaps[m / 2] : 0.5 * (gaps[m / 2 - 1] + gaps[m / 2]);
}

double carrier_wavenumber(const MarginalCurve& curve, std::size_t min_maxima)
{
    const auto maxima = find_fringe_maxima(curve, kDefaultProminence);
    if (maxima.size() < min_maxima) {
        throw AnalysisError("fringe analysis needs at least " + std::to_string(min_maxima) + " maxima, found "
                            + std::to_string(maxima.size()));
    }
    const double guess = kTwoPi / median_spacing(maxima);
    const double nyquist = std::numbers::pi / curve.grid.spacing();

    // coarse scan of the carrier lobe, then golden-section refinement
    constexpr int kScan = 400;
    const double lo = 0.6 * guess;
    const double hi = std::min(1.5 * guess, nyquist);
    const double step = (hi - lo) / kScan;
    double best_k = lo;
    double best = -1.0;
    for (int s = 0; s <= kScan; ++s) {
        const double k = lo + s * step;
        const double mag = std::abs(hann_spectrum(curve, k));
        if (mag > best) {
            best = mag;
            best_k = k;
        }
    }
    if (!(best > 0.0)) {
        throw AnalysisError("curve has no fringe carrier");
    }
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = best_k - step;
    double b = best_k + step;
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double fc = std::abs(hann_spectrum(curve, c));
    double fd = std::abs(hann_spectrum(curve, d));
    for (int it = 0; it < 200 && (b - a) > 1e-13 * best_k; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = std::abs(hann_spectrum(curve, c));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = std::abs(hann_spectrum(curve, d));
        }
    }
    return 0.5 * (a + b);
}

std::pair<std::size_t, std::size_t> support_hull(const std::vector<double>& v, double threshold)
{
    const double peak = *std::max_element(v.begin(), v.end());
    const double level = threshold * peak;
    std::size_t first = v.size();
    std::size_t last = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] >= level && peak > 0.0) {
            first = std::min(first, i);
            last = i;
        }
    }
    return {first, last};
}

// Crossing of `level` between samples a (below) and b (at or above).
double crossing(const Grid1D& grid, const std::vector<double>& v, std::size_t below, std::size_t above, double level)
{
    const double span = v[above] - v[below];
    const double t = span != 0.0 ? (level - v[below]) / span : 1.0;
    return grid.point(below) + t * (grid.point(above) - grid.point(below));
}

} // namespace

std::vector<double> find_local_maxima(std::span<const double> values, const Grid1D& grid, double min_prominence)
{
    return maxima_of(values, grid, min_prominence);
}

std::vector<double> find_local_minima(std::span<const double> values, const Grid1D& grid, double min_prominence)
{
    std::vector<double> negated(values.begin(), values.end());
    for (double& v : negated) {
        v = -v;
    }
    return maxima_of(negated, grid, min_prominence);
}

std::vector<double> find_fringe_maxima(const MarginalCurve& curve, double min_prominence)
{
    return maxima_of(curve.values, curve.grid, min_prominence);
}

double fringe_wavenumber(const MarginalCurve& curve)
{
    return carrier_wavenumber(curve, 3);
}

double fringe_period(const MarginalCurve& curve)
{
    return kTwoPi / fringe_wavenumber(curve);
}

double fringe_shift(const MarginalCurve& curve, const MarginalCurve& reference)
{
    if (!(curve.grid == reference.grid)) {
        throw InvalidInput("fringe_shift: curves must share one grid");
    }
    if (find_fringe_maxima(curve, kDefaultProminence).empty()) {
        throw AnalysisError("fringe_shift: curve has no fringe maximum");
    }
    const double k = carrier_wavenumber(reference, 2);
    const auto r = hann_spectrum(reference, k);
    const auto c = hann_spectrum(curve, k);
    if (std::abs(r) == 0.0 || std::abs(c) == 0.0) {
        throw AnalysisError("fringe_shift: no fringe carrier to compare");
    }
    // c(x) = r(x - s)  =>  C(k) = R(k) exp(-i k s)
    double theta = std::arg(r * std::conj(c));
    if (theta < 0.0) {
        theta += kTwoPi;
    }
    if (theta > kTwoPi - 1e-6) {
        theta -= kTwoPi;
    }
    return theta / k;
}

std::optional<std::pair<double, double>> common_projection_interval(const WignerField& field1,
                                                                   const WignerField& field2, Axis axis,
                                                                   double threshold)
{
    if (!(field1.grid() == field2.grid())) {
        throw InvalidInput("common_projection_interval: fields must share one grid");
    }
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw InvalidInput("common_projection_interval: threshold must lie in (0, 1)");
    }
    auto [x1, p1] = numeric::marginals_from_wdf(field1, 1.0);
    auto [x2, p2] = numeric::marginals_from_wdf(field2, 1.0);
    const MarginalCurve& a = axis == Axis::position ? x1 : p1;
    const MarginalCurve& b = axis == Axis::position ? x2 : p2;
    const Grid1D& grid = a.grid;

    auto edges = [&](const MarginalCurve& m) -> std::optional<std::pair<double, double>> {
        const auto [first, last] = support_hull(m.values, threshold);
        if (first > last || first == m.values.size()) {
            return std::nullopt;
        }
        const double level = threshold * *std::max_element(m.values.begin(), m.values.end());
        const double lo = first > 0 ? crossing(grid, m.values, first - 1, first, level) : grid.point(first);
        const double hi = last + 1 < m.values.size() ? crossing(grid, m.values, last + 1, last, level) : grid.point(last);
        return std::pair{lo, hi};
    };
    const auto ea = edges(a);
    const auto eb = edges(b);
    if (!ea || !eb) {
        return std::nullopt;
    }
    const double lo = std::max(ea->first, eb->first);
    const double hi = std::min(ea->second, eb->second);
    if (lo > hi) {
        return std::nullopt;
    }
    return std::pair{lo, hi};
}

} // namespace wignerab::analysis
