#include "cli/cli.hpp"

#include "capillary/curves.hpp"
#include "capillary/errors.hpp"
#include "capillary/forces.hpp"
#include "capillary/regions.hpp"
#include "cli/output.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <utility>

namespace capillary::cli {

namespace {

using nlohmann::json;

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kDegree = std::numbers::pi / 180.0;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --<name>-deg / --<name>-rad pair; stored in radians.
struct AngleOption {
    std::string name;
    double degrees = 0.0;
    double radians = 0.0;
    CLI::Option* deg = nullptr;
    CLI::Option* rad = nullptr;

    void add(CLI::App* app, const std::string& option, const std::string& description) {
        name = option;
        deg = app->add_option("--" + option + "-deg", degrees, description + "; degrees");
        rad = app->add_option("--" + option + "-rad", radians, description + "; radians");
        deg->excludes(rad);
    }
    bool given() const { return deg->count() > 0 || rad->count() > 0; }
    double value() const {
        if (deg->count() > 0) return degrees * kDegree;
        if (rad->count() > 0) return radians;
        throw UsageError("--" + name + "-deg or --" + name + "-rad is required");
    }
    double value_or(double fallback) const { return given() ? value() : fallback; }
};

struct RegimeFlags {
    bool attracting = false;
    bool critical = false;
    bool repelling = false;

    void add(CLI::App* app, bool with_critical = true) {
        auto* a = app->add_flag("--attracting", attracting, "attracting family (c > 1)");
        auto* r = app->add_flag("--repelling", repelling, "repelling family (0 < c < 1)");
        a->excludes(r);
        if (with_critical) {
            auto* c = app->add_flag("--critical", critical, "critical curve (c = 1)");
            c->excludes(a)->excludes(r);
        }
    }
    Regime selected() const {
        if (attracting) return Regime::Attracting;
        if (repelling) return Regime::Repelling;
        if (critical) return Regime::Critical;
        throw UsageError("one of --attracting, --repelling or --critical is required");
    }
};

struct OutputOptions {
    std::string format = "csv";
    std::string path;
    int precision = default_precision();

    void add(CLI::App* app, std::vector<std::string> formats) {
        app->add_option("--format", format, "output format")->check(CLI::IsMember(std::move(formats)));
        app->add_option("-o,--output", path, "output file ('-' for standard output)");
        app->add_option("--precision", precision, "significant digits")->check(CLI::Range(1, 17));
    }
    OutputSpec spec() const {
        OutputSpec s;
        s.format = format_from_string(format).value_or(Format::Csv);
        s.path = path;
        s.precision = precision;
        s.validate();
        return s;
    }
};

// Writes through `write` to the requested file or to `out`.
void emit(const OutputSpec& spec, std::ostream& out, const std::function<void(std::ostream&)>& write) {
    if (spec.path.empty() || spec.path == "-") {
        write(out);
        return;
    }
    std::ofstream file(spec.path);
    if (!file) throw std::runtime_error("cannot open " + spec.path + " for writing");
    write(file);
    if (!file) throw std::runtime_error("failed writing " + spec.path);
}

// "key = value" lines, or one JSON object.
class Record {
public:
    explicit Record(int precision) : precision_(precision) {}

    Record& add(const std::string& key, double value) {
        fields_.emplace_back(key, json(round_to(value, precision_)));
        return *this;
    }
    Record& add(const std::string& key, std::string_view value) {
        fields_.emplace_back(key, json(std::string(value)));
        return *this;
    }
    Record& add(const std::string& key, int value) {
        fields_.emplace_back(key, json(value));
        return *this;
    }

    void write(std::ostream& os, bool as_json) const {
        if (as_json) {
            json doc = json::object();
            for (const auto& [k, v] : fields_) doc[k] = v;
            os << doc.dump(2) << '\n';
            return;
        }
        for (const auto& [k, v] : fields_) {
            os << k << " = ";
            if (v.is_number_float()) {
                os << format_number(v.get<double>(), precision_);
            } else if (v.is_string()) {
                os << v.get<std::string>();
            } else {
                os << v.dump();
            }
            os << '\n';
        }
    }

private:
    int precision_;
    std::vector<std::pair<std::string, json>> fields_;
};

void add_family(Record& r, const FamilyParameter& f) {
    r.add("regime", to_string(f.regime)).add("c", f.c);
    if (f.regime == Regime::Attracting) r.add("u0", f.u0).add("delta", f.delta);
    if (f.regime == Regime::Repelling) r.add("psi0", f.psi0).add("psi0_deg", f.psi0 / kDegree).add("u0", f.u0);
}

PlateSide parse_side(const std::string& side) {
    return side == "left" ? PlateSide::LeftFacing : PlateSide::RightFacing;
}

FigureData single_curve(const SampledCurve& curve, std::string label, std::optional<double> force) {
    FigureData fig;
    fig.title = label;
    fig.series.push_back(Series{std::move(label), "curve", force, curve});
    return fig;
}

void write_curve(std::ostream& os, const SampledCurve& curve, const OutputSpec& spec, const std::string& label) {
    switch (spec.format) {
    case Format::Csv: write_curve_csv(os, curve, spec.precision); break;
    case Format::Json: write_curve_json(os, curve, spec.precision); break;
    case Format::Svg: write_svg(os, single_curve(curve, label, std::nullopt)); break;
    }
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(i + 1 == n ? hi : lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    }
    return out;
}

std::string label_number(const std::string& name, double value) {
    return name + "=" + format_number(value, 6);
}

FigureData figure_one(double psi0, std::size_t samples) {
    FigureData fig;
    fig.title = "orientation reversal of a repelling curve crossing the xi-axis";
    fig.series.push_back(Series{label_number("psi0", psi0), "curve", repelling_force(psi0).f,
                                repelling_curve(psi0, samples)});
    return fig;
}

FigureData figure_two(std::size_t samples) {
    FigureData fig;
    fig.title = "attracting curves of constant force U0^2";
    for (double u0 : {0.25, 0.5, 0.75, 1.0, 1.5, 2.0}) {
        fig.series.push_back(Series{label_number("u0", u0), "curve", attracting_force(u0).f,
                                    attracting_curve(u0, samples)});
    }
    const EnvelopeLocus right = attracting_envelope(log_grid(0.05, 3.0, 40));
    fig.series.push_back(envelope_series(right, "vertical points (right)"));
    fig.series.push_back(envelope_series(mirror(right), "vertical points (left)"));
    return fig;
}

FigureData figure_three(std::size_t samples) {
    FigureData fig;
    fig.title = "attracting curves shifted onto solution I";
    const CriticalAnchor anchor{};
    const std::vector<double> heights{0.2, 0.1, 0.05, 0.025};
    const LimitSweepReport report = limit_sweep(heights, anchor, Window{});
    for (const auto& entry : report.entries) {
        const SampledCurve curve = attracting_curve(entry.u0, samples);
        fig.series.push_back(Series{label_number("u0", entry.u0) + " initial", "curve", attracting_force(entry.u0).f, curve});
        fig.series.push_back(Series{label_number("u0", entry.u0) + " shifted", "curve", attracting_force(entry.u0).f,
                                    translate(curve, entry.shift)});
    }
    fig.series.push_back(Series{"solution I", "curve", 0.0, critical_curve(anchor, samples, 2e-3)});
    return fig;
}

FigureData figure_four(std::size_t samples) {
    FigureData fig;
    fig.title = "repelling curves and the loci of their vertical points";
    for (double deg : {10.0, 20.0, 30.0, 45.0, 60.0, 75.0}) {
        const double psi0 = deg * kDegree;
        fig.series.push_back(Series{label_number("psi0_deg", deg), "curve", repelling_force(psi0).f,
                                    repelling_curve(psi0, samples)});
    }
    std::vector<double> grid;
    for (int i = 1; i <= 45; ++i) grid.push_back(i * 2.0 * kDegree);
    grid.back() = kHalfPi;
    const RepellingEnvelope env = repelling_envelope(grid);
    fig.series.push_back(envelope_series(env.upper, "E+"));
    fig.series.push_back(envelope_series(env.lower, "E-"));
    return fig;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Meniscus curves, plate forces and envelopes for the two-dimensional capillarity equation",
                 "capillary"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "expand all help");

    // curve
    auto* curve_cmd = app.add_subcommand("curve", "sample one solution curve");
    RegimeFlags curve_regime;
    curve_regime.add(curve_cmd);
    double curve_u0 = 1.0;
    auto* curve_u0_opt = curve_cmd->add_option("--u0", curve_u0, "minimum height of an attracting curve");
    AngleOption curve_psi0, curve_psi2, curve_psi_min;
    curve_psi0.add(curve_cmd, "psi0", "axis-crossing angle of a repelling curve");
    curve_psi2.add(curve_cmd, "psi2", "anchor inclination of the critical curve, default 90 degrees");
    curve_psi_min.add(curve_cmd, "psi-min", "smallest sampled inclination of the critical curve");
    double curve_xi2 = 0.0;
    curve_cmd->add_option("--xi2", curve_xi2, "anchor position of the critical curve");
    std::size_t curve_samples = 101;
    curve_cmd->add_option("--samples", curve_samples, "number of samples")->check(CLI::Range(3, 10'000'000));
    std::string curve_route = "auto";
    curve_cmd->add_option("--route", curve_route, "construction route")
        ->check(CLI::IsMember({"auto", "psi", "closed", "arclength"}));
    double curve_s_max = 50.0;
    curve_cmd->add_option("--s-max", curve_s_max, "arclength budget of the arclength route");
    OutputOptions curve_out;
    curve_out.add(curve_cmd, {"csv", "json", "svg"});

    // force
    auto* force_cmd = app.add_subcommand("force", "normalized plate force of a family");
    RegimeFlags force_regime;
    force_regime.add(force_cmd);
    double force_u0 = 0.0;
    force_cmd->add_option("--u0", force_u0, "minimum height of the attracting curve");
    AngleOption force_psi0;
    force_psi0.add(force_cmd, "psi0", "axis-crossing angle of the repelling curve");
    double force_sigma = 0.0;
    auto* force_sigma_opt = force_cmd->add_option("--sigma", force_sigma, "surface tension for dimensional output");
    OutputOptions force_out;
    force_out.format = "text";
    force_out.add(force_cmd, {"text", "json"});

    // plates
    auto* plates_cmd = app.add_subcommand("plates", "plate separation (forward) or family (inverse)");
    RegimeFlags plates_regime;
    plates_regime.add(plates_cmd);
    AngleOption gamma1, gamma2, plates_psi0;
    gamma1.add(plates_cmd, "gamma1", "contact angle at plate 1");
    gamma2.add(plates_cmd, "gamma2", "contact angle at plate 2");
    plates_psi0.add(plates_cmd, "psi0", "axis-crossing angle (forward repelling problem)");
    std::string side1, side2;
    plates_cmd->add_option("--side1", side1, "side of the meniscus bounded by plate 1")
        ->check(CLI::IsMember({"left", "right"}));
    plates_cmd->add_option("--side2", side2, "side of the meniscus bounded by plate 2")
        ->check(CLI::IsMember({"left", "right"}));
    double plates_u0 = 0.0, plates_sep = 0.0;
    auto* plates_u0_opt = plates_cmd->add_option("--u0", plates_u0, "minimum height (forward attracting problem)");
    auto* plates_sep_opt = plates_cmd->add_option("--separation", plates_sep, "plate separation (inverse problem)");
    plates_sep_opt->excludes(plates_u0_opt);
    OutputOptions plates_out;
    plates_out.format = "text";
    plates_out.add(plates_cmd, {"text", "json"});

    // envelope
    auto* env_cmd = app.add_subcommand("envelope", "loci of vertical points of a family");
    RegimeFlags env_regime;
    env_regime.add(env_cmd, false);
    std::vector<double> env_grid, env_grid_deg;
    auto* grid_opt = env_cmd->add_option("--grid", env_grid, "u0 values (attracting) or psi0 radians (repelling)")
                         ->delimiter(',');
    auto* grid_deg_opt = env_cmd->add_option("--grid-deg", env_grid_deg, "psi0 values in degrees (repelling)")
                             ->delimiter(',');
    grid_opt->excludes(grid_deg_opt);
    int env_count = 40;
    env_cmd->add_option("--count", env_count, "default grid size")->check(CLI::Range(2, 100000));
    OutputOptions env_out;
    env_out.add(env_cmd, {"csv", "json", "svg"});

    // limit-sweep
    auto* sweep_cmd = app.add_subcommand("limit-sweep", "distance of shifted attracting curves to solution I");
    std::vector<double> sweep_u0{0.2, 0.1, 0.05, 0.025};
    sweep_cmd->add_option("--u0", sweep_u0, "decreasing minimum heights")->delimiter(',');
    AngleOption sweep_psi2;
    sweep_psi2.add(sweep_cmd, "psi2", "anchor inclination, default 90 degrees");
    double sweep_xi2 = 0.0;
    sweep_cmd->add_option("--xi2", sweep_xi2, "anchor position");
    std::vector<double> sweep_window{-3.0, -0.5};
    sweep_cmd->add_option("--window", sweep_window, "xi window lo,hi")->delimiter(',')->expected(2);
    std::size_t sweep_grid = 201;
    sweep_cmd->add_option("--grid", sweep_grid, "abscissae in the window")->check(CLI::Range(2, 1000000));
    OutputOptions sweep_out;
    sweep_out.add(sweep_cmd, {"csv", "json"});

    // figure
    auto* fig_cmd = app.add_subcommand("figure", "regenerate the geometry of a figure");
    int figure_number = 0;
    fig_cmd->add_option("number", figure_number, "figure number, 1-4")->required()->check(CLI::Range(1, 4));
    std::size_t fig_samples = 101;
    fig_cmd->add_option("--samples", fig_samples, "samples per curve")->check(CLI::Range(3, 1000000));
    AngleOption fig_psi0;
    fig_psi0.add(fig_cmd, "psi0", "crossing angle for figure 1, default 45 degrees");
    OutputOptions fig_out;
    fig_out.add(fig_cmd, {"csv", "json", "svg"});

    // convert
    auto* conv_cmd = app.add_subcommand("convert", "dimensional <-> universal coordinates");
    double kappa = 0.0, rho = 0.0, gravity = 0.0, sigma = 0.0;
    auto* kappa_opt = conv_cmd->add_option("--kappa", kappa, "capillarity constant rho g / sigma (1/length^2)");
    auto* rho_opt = conv_cmd->add_option("--rho", rho, "density difference");
    auto* g_opt = conv_cmd->add_option("--g", gravity, "gravitational acceleration");
    auto* sigma_opt = conv_cmd->add_option("--sigma", sigma, "surface tension");
    double conv_a = 0.0, conv_b = 0.0;
    conv_cmd->add_option("--x", conv_a, "horizontal coordinate (length, or xi with --to-physical)");
    conv_cmd->add_option("--u", conv_b, "height (length, or U with --to-physical)");
    bool to_physical_flag = false;
    conv_cmd->add_flag("--to-physical", to_physical_flag, "convert (xi, U) back to lengths");
    OutputOptions conv_out;
    conv_out.format = "text";
    conv_out.add(conv_cmd, {"text", "json"});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (curve_cmd->parsed()) {
            const OutputSpec spec = curve_out.spec();
            const Regime regime = curve_regime.selected();
            std::string route = curve_route;
            if (route == "auto") route = regime == Regime::Critical ? "closed" : "psi";
            SampledCurve curve;
            std::string label;
            switch (regime) {
            case Regime::Attracting:
                if (curve_u0_opt->count() == 0) throw UsageError("--u0 is required for an attracting curve");
                if (route == "closed") throw UsageError("the closed-form route exists only for the critical curve");
                curve = route == "psi" ? attracting_curve(curve_u0, curve_samples)
                                       : attracting_curve_arclength(curve_u0, curve_s_max);
                label = label_number("u0", curve_u0);
                break;
            case Regime::Repelling: {
                const double psi0 = curve_psi0.value();
                if (route == "closed") throw UsageError("the closed-form route exists only for the critical curve");
                curve = route == "psi" ? repelling_curve(psi0, curve_samples)
                                       : repelling_curve_arclength(psi0, curve_s_max);
                label = label_number("psi0", psi0);
                break;
            }
            case Regime::Critical: {
                const CriticalAnchor anchor{curve_psi2.value_or(kHalfPi), curve_xi2};
                const double psi_min = curve_psi_min.value_or(1e-3);
                if (route == "psi") throw UsageError("the critical curve uses --route closed or arclength");
                curve = route == "closed" ? critical_curve(anchor, curve_samples, psi_min)
                                          : critical_curve_arclength(anchor, psi_min, curve_s_max);
                label = "solution I";
                break;
            }
            case Regime::NoGraphSolution: break;
            }
            emit(spec, out, [&](std::ostream& os) { write_curve(os, curve, spec, label); });
        } else if (force_cmd->parsed()) {
            std::optional<PhysicalScale> scale;
            if (force_sigma_opt->count() > 0) scale = PhysicalScale(1.0, force_sigma);
            ForceResult result;
            switch (force_regime.selected()) {
            case Regime::Attracting: result = attracting_force(force_u0, scale); break;
            case Regime::Repelling: result = repelling_force(force_psi0.value(), scale); break;
            default: result = family_force(FamilyParameter::critical(), scale); break;
            }
            Record r(force_out.precision);
            r.add("F", result.f).add("magnitude", result.magnitude());
            add_family(r, result.family);
            if (result.dimensional_per_length) r.add("force_per_length", *result.dimensional_per_length);
            emit(OutputSpec{Format::Csv, force_out.path, force_out.precision}, out,
                 [&](std::ostream& os) { r.write(os, force_out.format == "json"); });
        } else if (plates_cmd->parsed()) {
            const Regime regime = plates_regime.selected();
            PlateConfig config;
            config.gamma1 = gamma1.value();
            config.gamma2 = gamma2.value();
            const bool facing = regime == Regime::Attracting;
            config.side1 = side1.empty() ? (facing ? PlateSide::LeftFacing : PlateSide::RightFacing) : parse_side(side1);
            config.side2 = side2.empty() ? PlateSide::RightFacing : parse_side(side2);
            // Repelling curves with psi0 < 0 have both plates on the other side.
            if (regime == Regime::Repelling && side1.empty() && side2.empty() && plates_psi0.given() &&
                plates_psi0.value() < 0.0) {
                config.side1 = config.side2 = PlateSide::LeftFacing;
            }
            Record r(plates_out.precision);
            if (plates_sep_opt->count() > 0) {
                config.separation = plates_sep;
                const PlateSolution sol = solve_plates(config, regime);
                add_family(r, sol.family);
                r.add("separation", sol.geometry.separation).add("F", sol.force.f).add("brackets", sol.brackets);
            } else {
                FamilyParameter family = FamilyParameter::critical();
                if (regime == Regime::Attracting) {
                    if (plates_u0_opt->count() == 0) throw UsageError("--u0 or --separation is required");
                    family = FamilyParameter::attracting(plates_u0);
                } else if (regime == Regime::Repelling) {
                    if (!plates_psi0.given()) throw UsageError("--psi0-deg/--psi0-rad or --separation is required");
                    family = FamilyParameter::repelling(plates_psi0.value());
                }
                const PlateGeometry g = plate_separation(family, config);
                add_family(r, family);
                r.add("separation", g.separation)
                    .add("xi1", g.xi1)
                    .add("xi2", g.xi2)
                    .add("psi1", g.psi1)
                    .add("psi2", g.psi2)
                    .add("height1", g.height1)
                    .add("height2", g.height2)
                    .add("F", g.force.f);
            }
            emit(OutputSpec{Format::Csv, plates_out.path, plates_out.precision}, out,
                 [&](std::ostream& os) { r.write(os, plates_out.format == "json"); });
        } else if (env_cmd->parsed()) {
            const OutputSpec spec = env_out.spec();
            const Regime regime = env_regime.selected();
            FigureData fig;
            if (regime == Regime::Attracting) {
                if (grid_deg_opt->count() > 0) throw UsageError("--grid-deg applies to the repelling family");
                const auto grid = env_grid.empty() ? log_grid(0.05, 3.0, env_count) : env_grid;
                fig.title = "vertical points of the attracting family";
                const EnvelopeLocus right = attracting_envelope(grid);
                fig.series.push_back(envelope_series(right, "right"));
                fig.series.push_back(envelope_series(mirror(right), "left"));
            } else {
                std::vector<double> grid = env_grid;
                if (!env_grid_deg.empty()) {
                    grid.clear();
                    for (double d : env_grid_deg) grid.push_back(d * kDegree);
                }
                if (grid.empty()) {
                    for (int i = 1; i <= env_count; ++i) grid.push_back(kHalfPi * i / env_count);
                }
                fig.title = "vertical points of the repelling family";
                const RepellingEnvelope env = repelling_envelope(grid);
                fig.series.push_back(envelope_series(env.upper, "E+"));
                fig.series.push_back(envelope_series(env.lower, "E-"));
            }
            emit(spec, out, [&](std::ostream& os) { write_figure(os, fig, spec); });
        } else if (sweep_cmd->parsed()) {
            const OutputSpec spec = sweep_out.spec();
            const CriticalAnchor anchor{sweep_psi2.value_or(kHalfPi), sweep_xi2};
            const LimitSweepReport report =
                limit_sweep(sweep_u0, anchor, Window{sweep_window.at(0), sweep_window.at(1)}, sweep_grid);
            emit(spec, out, [&](std::ostream& os) {
                if (spec.format == Format::Json) {
                    json doc{{"psi2", round_to(anchor.psi2, spec.precision)},
                             {"xi2", round_to(anchor.xi2, spec.precision)},
                             {"window", {report.window.lo, report.window.hi}},
                             {"entries", json::array()}};
                    for (const auto& e : report.entries) {
                        doc["entries"].push_back({{"u0", round_to(e.u0, spec.precision)},
                                                  {"shift", round_to(e.shift, spec.precision)},
                                                  {"distance", round_to(e.distance, spec.precision)},
                                                  {"error_budget", round_to(e.error_budget, spec.precision)}});
                    }
                    os << doc.dump(2) << '\n';
                    return;
                }
                os << "u0,shift,distance,error_budget\n";
                for (const auto& e : report.entries) {
                    os << format_number(e.u0, spec.precision) << ',' << format_number(e.shift, spec.precision) << ','
                       << format_number(e.distance, spec.precision) << ','
                       << format_number(e.error_budget, spec.precision) << '\n';
                }
            });
        } else if (fig_cmd->parsed()) {
            const OutputSpec spec = fig_out.spec();
            FigureData fig;
            switch (figure_number) {
            case 1: fig = figure_one(fig_psi0.value_or(std::numbers::pi / 4.0), fig_samples); break;
            case 2: fig = figure_two(fig_samples); break;
            case 3: fig = figure_three(fig_samples); break;
            default: fig = figure_four(fig_samples); break;
            }
            emit(spec, out, [&](std::ostream& os) { write_figure(os, fig, spec); });
        } else if (conv_cmd->parsed()) {
            const bool fluid = rho_opt->count() > 0 || g_opt->count() > 0;
            std::optional<PhysicalScale> scale;
            if (fluid) {
                if (rho_opt->count() == 0 || g_opt->count() == 0 || sigma_opt->count() == 0) {
                    throw UsageError("--rho, --g and --sigma must be given together");
                }
                scale = kappa_opt->count() > 0 ? PhysicalScale(kappa, rho, gravity, sigma)
                                               : PhysicalScale::from_fluid(rho, gravity, sigma);
            } else {
                if (kappa_opt->count() == 0) throw UsageError("--kappa or --rho/--g/--sigma is required");
                scale = sigma_opt->count() > 0 ? PhysicalScale(kappa, sigma) : PhysicalScale(kappa);
            }
            Record r(conv_out.precision);
            r.add("kappa", scale->kappa());
            if (to_physical_flag) {
                const auto [x, u] = to_physical(conv_a, conv_b, *scale);
                r.add("x", x).add("u", u);
            } else {
                const auto [xi, height] = to_nondimensional(conv_a, conv_b, *scale);
                r.add("xi", xi).add("U", height);
            }
            r.add("capillary_length", 1.0 / std::sqrt(scale->kappa()));
            emit(OutputSpec{Format::Csv, conv_out.path, conv_out.precision}, out,
                 [&](std::ostream& os) { r.write(os, conv_out.format == "json"); });
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConvergenceError& e) {
        err << "convergence error: " << e.what() << " (best estimate " << format_number(e.best_estimate(), 12)
            << ")\n";
        return kExitFailure;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

} // namespace capillary::cli
