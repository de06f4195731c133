#include "wignerab/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "wignerab/analysis.hpp"
#include "wignerab/analytic.hpp"
#include "wignerab/errors.hpp"
#include "wignerab/io.hpp"

namespace wignerab::cli {

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kMaxPaddingFactor = 8.0;

struct RawGrids {
    Grid1D x;
    Grid1D p;
};

RawGrids raw_grids(const SimulateConfig& config)
{
    const auto& params = config.params;
    const auto& gx = config.grid.x_axis;
    const auto& gp = config.grid.p_axis;
    const double p_unit = params.hbar / params.x0;
    return {Grid1D(gx.min() * params.x0, gx.max() * params.x0, gx.size()),
            Grid1D(gp.min() * p_unit, gp.max() * p_unit, gp.size())};
}

SampledWavefunction source_wavefunction(const SlitPairParams& params, Source source, const Grid1D& grid)
{
    switch (source) {
    case Source::upper_slit:
        return numeric::sample_single_slit(params, analytic::Slit::upper, grid);
    case Source::lower_slit:
        return numeric::sample_single_slit(params, analytic::Slit::lower, grid);
    case Source::pair:
        break;
    }
    return numeric::sample_wavefunction(params, grid);
}

struct NumericState {
    SampledWavefunction psi;
    std::size_t padding;
};

// Samples on an x grid padded (same spacing) until the propagated packet has
// decayed below the guard, then applies free flight.
NumericState propagated_state(const SimulateConfig& config, Source source, const Grid1D& x_raw)
{
    const double half_width = numeric::decay_half_width(config.params, config.numeric.truncation_guard);
    const double dx = x_raw.spacing();
    const double need = std::max({0.0, (half_width - x_raw.max()) / dx, (x_raw.min() + half_width) / dx});
    if (need > kMaxPaddingFactor * static_cast<double>(x_raw.size())) {
        throw TruncationError("the propagated packet needs " + std::to_string(std::ceil(need))
                              + " padding points per side; widen the grid spacing");
    }
    const auto padding = static_cast<std::size_t>(std::ceil(need));
    const Grid1D padded = x_raw.padded(padding);
    auto psi = source_wavefunction(config.params, source, padded);
    psi = numeric::propagate_free(psi, config.params.alpha, config.params.hbar, config.numeric);
    return {std::move(psi), padding};
}

WignerField numeric_field(const SimulateConfig& config, const NumericState& state, const RawGrids& raw)
{
    auto result = numeric::wigner_transform(state.psi, raw.p, config.params.hbar, state.padding, raw.x.size(),
                                            config.numeric);
    if (result.imag_residue > config.numeric.realness_tolerance) {
        throw ConventionError("Wigner transform imaginary residue " + std::to_string(result.imag_residue)
                              + " exceeds tolerance");
    }
    return WignerField(config.grid, result.field.values());
}

WignerField simulate_field(const SimulateConfig& config, Source source)
{
    validate(config.params);
    const RawGrids raw = raw_grids(config);
    if (config.engine == Engine::numeric) {
        return numeric_field(config, propagated_state(config, source, raw.x), raw);
    }
    const Grid2D raw2d{raw.x, raw.p};
    if (source == Source::pair) {
        return WignerField(config.grid, analytic::sample_wdf(config.params, raw2d).values());
    }
    const auto slit = source == Source::upper_slit ? analytic::Slit::upper : analytic::Slit::lower;
    return WignerField(config.grid, analytic::sample_slit_wdf(config.params, slit, raw2d).values());
}

const char* engine_name(Engine engine)
{
    return engine == Engine::analytic ? "analytic" : "numeric";
}

nlohmann::json grid_json(const Grid2D& grid)
{
    return {{"xmin", grid.x_axis.min()}, {"xmax", grid.x_axis.max()}, {"nx", grid.x_axis.size()},
            {"pmin", grid.p_axis.min()}, {"pmax", grid.p_axis.max()}, {"np", grid.p_axis.size()},
            {"units", "normalized: X = x/x0, P = p*x0/hbar"}};
}

nlohmann::json params_json(const SlitPairParams& params)
{
    return {{"x0", params.x0}, {"d", params.d}, {"delta", params.delta}, {"hbar", params.hbar}, {"alpha", params.alpha}};
}

// -- command line plumbing ---------------------------------------------------

struct GridFlags {
    double xmin = -12.0;
    double xmax = 12.0;
    std::size_t nx = 512;
    double pmin = -4.0;
    double pmax = 4.0;
    std::size_t np = 512;
};

void add_physics_flags(CLI::App& cmd, SlitPairParams& params, Engine& engine, GridFlags& grid,
                       numeric::NumericOptions& numeric)
{
    cmd.add_option("--d", params.d, "Half slit separation (slits at +-d)")->capture_default_str();
    cmd.add_option("--x0", params.x0, "Gaussian slit width")->capture_default_str();
    cmd.add_option("--hbar", params.hbar, "Action constant")->capture_default_str();
    cmd.add_option("--alpha", params.alpha, "Free-flight parameter t/m")->capture_default_str();
    cmd.add_option("--delta", params.delta, "Aharonov-Bohm phase (rad)")->capture_default_str();
    const std::map<std::string, Engine> engines{{"analytic", Engine::analytic}, {"numeric", Engine::numeric}};
    cmd.add_option("--engine", engine, "analytic | numeric")
        ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case))
        ->default_str("analytic");
    cmd.add_option("--xmin", grid.xmin, "Grid start, X = x/x0")->capture_default_str();
    cmd.add_option("--xmax", grid.xmax, "Grid end, X = x/x0")->capture_default_str();
    cmd.add_option("--nx", grid.nx, "Grid points along X")->capture_default_str();
    cmd.add_option("--pmin", grid.pmin, "Grid start, P = p*x0/hbar")->capture_default_str();
    cmd.add_option("--pmax", grid.pmax, "Grid end, P = p*x0/hbar")->capture_default_str();
    cmd.add_option("--np", grid.np, "Grid points along P")->capture_default_str();
    cmd.add_option("--guard", numeric.truncation_guard, "Edge-decay guard for sampled wavefunctions")
        ->capture_default_str();
    cmd.add_option("--threads", numeric.threads, "Worker threads for numeric kernels")->capture_default_str();
}

SimulateConfig make_config(const SlitPairParams& params, Engine engine, const GridFlags& g,
                           const numeric::NumericOptions& numeric)
{
    validate(params);
    return SimulateConfig{params, engine, Grid2D{Grid1D(g.xmin, g.xmax, g.nx), Grid1D(g.pmin, g.pmax, g.np)},
                          numeric};
}

std::string json_text(const nlohmann::json& j)
{
    return j.dump(2) + "\n";
}

} // namespace

SimulationResult simulate(const SimulateConfig& config, Source source)
{
    validate(config.params);
    const RawGrids raw = raw_grids(config);
    if (config.engine == Engine::numeric) {
        const NumericState state = propagated_state(config, source, raw.x);
        WignerField field = numeric_field(config, state, raw);
        std::vector<double> density(raw.x.size());
        for (std::size_t i = 0; i < density.size(); ++i) {
            density[i] = std::norm(state.psi.values[state.padding + i]);
        }
        auto momentum = numeric::momentum_density(state.psi, raw.p, config.params.hbar, config.numeric);
        return SimulationResult{std::move(field),
                                MarginalCurve(Axis::position, config.grid.x_axis, std::move(density)),
                                MarginalCurve(Axis::momentum, config.grid.p_axis, std::move(momentum.values)),
                                state.padding};
    }
    if (source != Source::pair) {
        const auto slit = source == Source::upper_slit ? analytic::Slit::upper : analytic::Slit::lower;
        const WignerField raw_field = analytic::sample_slit_wdf(config.params, slit, Grid2D{raw.x, raw.p});
        auto [xm, pm] = numeric::marginals_from_wdf(raw_field, config.params.hbar);
        return SimulationResult{WignerField(config.grid, raw_field.values()),
                                MarginalCurve(Axis::position, config.grid.x_axis, std::move(xm.values)),
                                MarginalCurve(Axis::momentum, config.grid.p_axis, std::move(pm.values)), 0};
    }
    WignerField field = simulate_field(config, source);
    auto xm = analytic::sample_x_marginal(config.params, raw.x);
    auto pm = analytic::sample_p_marginal(config.params, raw.p);
    return SimulationResult{std::move(field), MarginalCurve(Axis::position, config.grid.x_axis, std::move(xm.values)),
                            MarginalCurve(Axis::momentum, config.grid.p_axis, std::move(pm.values)), 0};
}

nlohmann::json write_simulation(const SimulateConfig& config, const SimulationResult& result,
                                const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    const std::string wigner = io::wigner_csv(result.field);
    const std::string xm = io::marginal_csv(result.x_marginal);
    const std::string pm = io::marginal_csv(result.p_marginal);
    io::write_file_atomic(dir / "wigner.csv", wigner);
    io::write_file_atomic(dir / "x_marginal.csv", xm);
    io::write_file_atomic(dir / "p_marginal.csv", pm);

    nlohmann::json manifest = {
        {"tool", "wignerab"},
        {"version", kVersion},
        {"command", "simulate"},
        {"engine", engine_name(config.engine)},
        {"params", params_json(config.params)},
        {"grid", grid_json(config.grid)},
        {"numeric",
         {{"truncation_guard", config.numeric.truncation_guard},
          {"realness_tolerance", config.numeric.realness_tolerance},
          {"padding_points", result.padding}}},
        {"marginal_source", config.engine == Engine::analytic ? "closed form" : "|psi(x)|^2 and |phibar(p)|^2"},
        {"files",
         {{"wigner", {{"name", "wigner.csv"}, {"fnv1a64", io::fnv1a_hex(wigner)}}},
          {"x_marginal", {{"name", "x_marginal.csv"}, {"fnv1a64", io::fnv1a_hex(xm)}}},
          {"p_marginal", {{"name", "p_marginal.csv"}, {"fnv1a64", io::fnv1a_hex(pm)}}}}},
    };
    io::write_file_atomic(dir / "manifest.json", json_text(manifest));
    return manifest;
}

FringeReport make_fringe_report(const MarginalCurve& curve, const MarginalCurve* reference, double min_prominence)
{
    FringeReport report;
    report.maxima = analysis::find_fringe_maxima(curve, min_prominence);
    try {
        report.period_estimate = analysis::fringe_period(curve);
    } catch (const AnalysisError&) {
        report.period_estimate.reset();
    }
    if (reference != nullptr) {
        report.shift_vs_reference = analysis::fringe_shift(curve, *reference);
    }
    return report;
}

nlohmann::json to_json(const FringeReport& report)
{
    nlohmann::json j;
    j["maxima"] = report.maxima;
    j["period_estimate"] = report.period_estimate ? nlohmann::json(*report.period_estimate) : nlohmann::json(nullptr);
    j["shift_vs_reference"] =
        report.shift_vs_reference ? nlohmann::json(*report.shift_vs_reference) : nlohmann::json(nullptr);
    j["pattern_interval"] = report.pattern_interval
                                ? nlohmann::json::array({report.pattern_interval->first, report.pattern_interval->second})
                                : nlohmann::json(nullptr);
    return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Two-slit Wigner-function simulator with Aharonov-Bohm phase", "wignerab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    // simulate
    SlitPairParams sim_params = normalized_params();
    Engine sim_engine = Engine::analytic;
    GridFlags sim_grid;
    numeric::NumericOptions sim_numeric;
    std::string sim_out;
    auto* simulate_cmd = app.add_subcommand("simulate", "Write Wigner field, marginals and a run manifest");
    add_physics_flags(*simulate_cmd, sim_params, sim_engine, sim_grid, sim_numeric);
    simulate_cmd->add_option("--out", sim_out, "Output directory")->required();

    // fringes
    SlitPairParams fr_params = normalized_params();
    Engine fr_engine = Engine::analytic;
    GridFlags fr_grid;
    numeric::NumericOptions fr_numeric;
    std::string fr_curve, fr_reference, fr_out;
    double fr_reference_delta = 0.0;
    double fr_prominence = analysis::kDefaultProminence;
    double fr_threshold = 1e-4;
    Axis fr_axis = Axis::momentum;
    auto* fringes_cmd = app.add_subcommand("fringes", "Fringe maxima, period, shift and pattern interval (JSON)");
    add_physics_flags(*fringes_cmd, fr_params, fr_engine, fr_grid, fr_numeric);
    auto* curve_opt = fringes_cmd->add_option("--curve", fr_curve, "Marginal CSV to analyse");
    auto* ref_opt = fringes_cmd->add_option("--reference", fr_reference, "Reference marginal CSV");
    curve_opt->needs(ref_opt);
    ref_opt->needs(curve_opt);
    fringes_cmd->add_option("--reference-delta", fr_reference_delta, "Phase of the reference run")
        ->capture_default_str();
    const std::map<std::string, Axis> axes{{"position", Axis::position}, {"momentum", Axis::momentum}};
    fringes_cmd->add_option("--axis", fr_axis, "position | momentum")
        ->transform(CLI::CheckedTransformer(axes, CLI::ignore_case))
        ->default_str("momentum");
    fringes_cmd->add_option("--prominence", fr_prominence, "Minimum peak prominence, fraction of max")
        ->capture_default_str();
    fringes_cmd->add_option("--threshold", fr_threshold, "Projection threshold for the pattern interval")
        ->capture_default_str();
    fringes_cmd->add_option("--out", fr_out, "Write the report here instead of stdout");

    // phase
    std::optional<double> flux, flux_quantum, scale;
    std::vector<std::string> electric, neutron;
    auto* phase_cmd = app.add_subcommand("phase", "Convert flux or pulse integrals to the AB phase (rad)");
    phase_cmd->add_option("--flux", flux, "Enclosed magnetic flux");
    phase_cmd->add_option("--flux-quantum", flux_quantum, "Flux quantum hc/e in the same units");
    phase_cmd->add_option("--electric", electric, "Voltage pulse CSVs for path 1 and path 2")->expected(2);
    phase_cmd->add_option("--neutron", neutron, "mu.B pulse CSVs for path 1 and path 2")->expected(2);
    phase_cmd->add_option("--scale", scale, "e/hbar (electric) or 1/hbar (neutron)");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("wignerab");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (simulate_cmd->parsed()) {
            const auto config = make_config(sim_params, sim_engine, sim_grid, sim_numeric);
            const auto result = simulate(config);
            write_simulation(config, result, sim_out);
            out << "wrote " << (std::filesystem::path(sim_out) / "wigner.csv").string() << ", x_marginal.csv, "
                << "p_marginal.csv, manifest.json\n";
            return kOk;
        }

        if (fringes_cmd->parsed()) {
            FringeReport report;
            if (!fr_curve.empty()) {
                const auto curve = io::parse_marginal_csv(io::read_file(fr_curve), fr_axis);
                const auto reference = io::parse_marginal_csv(io::read_file(fr_reference), fr_axis);
                report = make_fringe_report(curve, &reference, fr_prominence);
            } else {
                const auto config = make_config(fr_params, fr_engine, fr_grid, fr_numeric);
                auto ref_config = config;
                ref_config.params.delta = fr_reference_delta;
                const auto current = simulate(config);
                const auto reference = simulate(ref_config);
                const bool on_x = fr_axis == Axis::position;
                report = make_fringe_report(on_x ? current.x_marginal : current.p_marginal,
                                            on_x ? &reference.x_marginal : &reference.p_marginal, fr_prominence);
                report.pattern_interval = analysis::common_projection_interval(
                    simulate_field(config, Source::upper_slit), simulate_field(config, Source::lower_slit), fr_axis,
                    fr_threshold);
            }
            const std::string text = json_text(to_json(report));
            if (fr_out.empty()) {
                out << text;
            } else {
                io::write_file_atomic(fr_out, text);
            }
            return kOk;
        }

        if (phase_cmd->parsed()) {
            const int modes = (flux || flux_quantum ? 1 : 0) + (electric.empty() ? 0 : 1) + (neutron.empty() ? 0 : 1);
            if (modes != 1) {
                err << "error: give exactly one of --flux/--flux-quantum, --electric, --neutron\n";
                return kUsage;
            }
            double delta = 0.0;
            if (flux || flux_quantum) {
                if (!flux || !flux_quantum) {
                    err << "error: --flux and --flux-quantum go together\n";
                    return kUsage;
                }
                delta = analytic::delta_from_flux({*flux, *flux_quantum});
            } else {
                if (!scale) {
                    err << "error: --scale is required with pulse files\n";
                    return kUsage;
                }
                const auto& files = electric.empty() ? neutron : electric;
                const auto path1 = io::parse_pulse_csv(io::read_file(files[0]));
                const auto path2 = io::parse_pulse_csv(io::read_file(files[1]));
                delta = electric.empty() ? analytic::delta_scalar_neutron(path1, path2, *scale)
                                         : analytic::delta_scalar_electric(path1, path2, *scale);
            }
            std::array<char, 64> buf{};
            std::snprintf(buf.data(), buf.size(), "%.12g", delta);
            out << buf.data() << "\n";
            return kOk;
        }
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const TruncationError& e) {
        err << "numerical guard: " << e.what() << "\n";
        return kNumericalGuard;
    } catch (const ConventionError& e) {
        err << "numerical guard: " << e.what() << "\n";
        return kNumericalGuard;
    } catch (const AnalysisError& e) {
        err << "analysis failure: " << e.what() << "\n";
        return kAnalysisFailure;
    }
    return kUsage;
}

} // namespace wignerab::cli
