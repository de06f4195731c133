#include "wignerab/quadrature.hpp"

#include "wignerab/errors.hpp"

namespace wignerab {

double trapezoid(std::span<const double> values, double spacing)
{
    if (values.size() < 2) {
        return 0.0;
    }
    double sum = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        sum += values[i];
    }
    return sum * spacing;
}

double trapezoid(std::span<const double> abscissae, std::span<const double> values)
{
    if (abscissae.size() != values.size()) {
        throw InvalidInput("trapezoid: abscissae and values differ in length");
    }
    double sum = 0.0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        sum += 0.5 * (values[i] + values[i - 1]) * (abscissae[i] - abscissae[i - 1]);
    }
    return sum;
}

double simpson(std::span<const double> values, double spacing)
{
    if (values.size() < 3 || values.size() % 2 == 0) {
        throw InvalidInput("simpson: needs an odd number of samples >= 3");
    }
    double sum = values.front() + values.back();
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        sum += (i % 2 == 1 ? 4.0 : 2.0) * values[i];
    }
    return sum * spacing / 3.0;
}

} // namespace wignerab
