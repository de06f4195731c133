#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wignerab/model.hpp"
#include "wignerab/numeric.hpp"

namespace wignerab::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kNumericalGuard = 3, kAnalysisFailure = 4 };

enum class Engine { analytic, numeric };

enum class Source { pair, upper_slit, lower_slit };

/// One simulation request. The grid is in normalized coordinates
/// X = x / x0 and P = p x0 / hbar.
struct SimulateConfig {
    SlitPairParams params{};
    Engine engine = Engine::analytic;
    Grid2D grid{Grid1D(-12.0, 12.0, 512), Grid1D(-4.0, 4.0, 512)};
    numeric::NumericOptions numeric{};
};

/// Field and marginals on the normalized grid (values are in physical units).
struct SimulationResult {
    WignerField field;
    MarginalCurve x_marginal;
    MarginalCurve p_marginal;
    /// Extra grid points added on each side of the x axis by the numeric engine.
    std::size_t padding = 0;
};

SimulationResult simulate(const SimulateConfig& config, Source source = Source::pair);

/// Writes wigner.csv, x_marginal.csv, p_marginal.csv and manifest.json into `dir`.
nlohmann::json write_simulation(const SimulateConfig& config, const SimulationResult& result,
                                const std::filesystem::path& dir);

/// maxima, period (null with fewer than 3 maxima), shift against `reference`
/// when given, and the pattern interval when given.
FringeReport make_fringe_report(const MarginalCurve& curve, const MarginalCurve* reference, double min_prominence);

nlohmann::json to_json(const FringeReport& report);

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wignerab::cli
