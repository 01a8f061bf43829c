#include "cli/output.hpp"

#include "capillary/curves.hpp"
#include "capillary/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace capillary::cli {

namespace {

using nlohmann::json;

double parse_number(std::string_view text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        out.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    return s;
}

json family_json(const FamilyParameter& f, int precision) {
    return json{{"c", round_to(f.c, precision)},
                {"regime", to_string(f.regime)},
                {"delta", round_to(f.delta, precision)},
                {"u0", round_to(f.u0, precision)},
                {"psi0", round_to(f.psi0, precision)}};
}

json points_json(const std::vector<CurvePoint>& points, int precision) {
    json arr = json::array();
    for (const auto& p : points) {
        arr.push_back(json{{"xi", round_to(p.xi, precision)},
                           {"U", round_to(p.height, precision)},
                           {"psi", round_to(p.psi, precision)},
                           {"v", round_to(p.v, precision)},
                           {"s", p.s ? json(round_to(*p.s, precision)) : json(nullptr)}});
    }
    return arr;
}

json curve_json(const SampledCurve& curve, int precision) {
    return json{{"route", to_string(curve.route)},
                {"normalized", curve.normalized},
                {"graph", curve.graph},
                {"family", family_json(curve.family, precision)},
                {"points", points_json(curve.points, precision)}};
}

std::string point_row(const CurvePoint& p, const FamilyParameter& family, int precision) {
    std::string row = format_number(p.xi, precision);
    row += ',' + format_number(p.height, precision);
    row += ',' + format_number(p.psi, precision);
    row += ',' + format_number(p.v, precision);
    row += ',';
    if (p.s) row += format_number(*p.s, precision);
    row += ',' + format_number(family.c, precision);
    row += ',';
    row += to_string(family.regime);
    return row;
}

void write_metadata(std::ostream& os, const SampledCurve& curve, int precision) {
    os << "# route=" << to_string(curve.route) << '\n';
    os << "# regime=" << to_string(curve.family.regime) << '\n';
    os << "# c=" << format_number(curve.family.c, precision) << '\n';
    os << "# delta=" << format_number(curve.family.delta, precision) << '\n';
    os << "# u0=" << format_number(curve.family.u0, precision) << '\n';
    os << "# psi0=" << format_number(curve.family.psi0, precision) << '\n';
    os << "# normalized=" << (curve.normalized ? "true" : "false") << '\n';
    os << "# graph=" << (curve.graph ? "true" : "false") << '\n';
}

constexpr std::string_view kCurveHeader = "xi,U,psi,v,s,c,regime";

} // namespace

std::optional<Format> format_from_string(std::string_view name) noexcept {
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    if (name == "svg") return Format::Svg;
    return std::nullopt;
}

void OutputSpec::validate() const {
    if (precision < 1 || precision > 17) throw DomainError("precision must lie in [1, 17]");
}

int default_precision() {
    if (const char* env = std::getenv("CAPILLARY_PRECISION")) {
        int value = 0;
        const std::string_view text(env);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc{} && ptr == text.data() + text.size() && value >= 1 && value <= 17) return value;
    }
    return 12;
}

std::string format_number(double value, int precision) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, precision);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

double round_to(double value, int precision) {
    if (!std::isfinite(value)) return value;
    return parse_number(format_number(value, precision));
}

void write_curve_csv(std::ostream& os, const SampledCurve& curve, int precision) {
    os << "# capillary curve\n";
    write_metadata(os, curve, precision);
    os << kCurveHeader << '\n';
    for (const auto& p : curve.points) os << point_row(p, curve.family, precision) << '\n';
}

void write_curve_json(std::ostream& os, const SampledCurve& curve, int precision) {
    os << curve_json(curve, precision).dump(2) << '\n';
}

SampledCurve read_curve_csv(std::istream& is) {
    SampledCurve curve;
    std::string line;
    bool header = false;
    while (std::getline(is, line)) {
        const std::string_view text = trim(line);
        if (text.empty()) continue;
        if (text.front() == '#') {
            const auto eq = text.find('=');
            if (eq == std::string_view::npos) continue;
            const std::string_view key = trim(text.substr(1, eq - 1));
            const std::string_view value = trim(text.substr(eq + 1));
            if (key == "route") {
                curve.route = route_from_string(value).value_or(Route::PsiQuadrature);
            } else if (key == "regime") {
                curve.family.regime = regime_from_string(value).value_or(Regime::NoGraphSolution);
            } else if (key == "c") {
                curve.family.c = parse_number(value);
            } else if (key == "delta") {
                curve.family.delta = parse_number(value);
            } else if (key == "u0") {
                curve.family.u0 = parse_number(value);
            } else if (key == "psi0") {
                curve.family.psi0 = parse_number(value);
            } else if (key == "normalized") {
                curve.normalized = value == "true";
            } else if (key == "graph") {
                curve.graph = value == "true";
            }
            continue;
        }
        if (!header) {
            if (text != kCurveHeader) throw std::invalid_argument("unexpected CSV header: " + std::string(text));
            header = true;
            continue;
        }
        const auto cells = split(text, ',');
        if (cells.size() != 7) throw std::invalid_argument("CSV row needs 7 fields: " + std::string(text));
        CurvePoint p;
        p.xi = parse_number(cells[0]);
        p.height = parse_number(cells[1]);
        p.psi = parse_number(cells[2]);
        p.v = parse_number(cells[3]);
        if (!cells[4].empty()) p.s = parse_number(cells[4]);
        curve.points.push_back(p);
    }
    if (!header) throw std::invalid_argument("CSV input has no header");
    return curve;
}

SampledCurve read_curve_json(std::istream& is) {
    const json doc = json::parse(is);
    SampledCurve curve;
    curve.route = route_from_string(doc.at("route").get<std::string>()).value_or(Route::PsiQuadrature);
    curve.normalized = doc.at("normalized").get<bool>();
    curve.graph = doc.value("graph", true);
    const json& f = doc.at("family");
    curve.family.c = f.at("c").get<double>();
    curve.family.regime = regime_from_string(f.at("regime").get<std::string>()).value_or(Regime::NoGraphSolution);
    curve.family.delta = f.at("delta").get<double>();
    curve.family.u0 = f.at("u0").get<double>();
    curve.family.psi0 = f.at("psi0").get<double>();
    for (const json& p : doc.at("points")) {
        CurvePoint q;
        q.xi = p.at("xi").get<double>();
        q.height = p.at("U").get<double>();
        q.psi = p.at("psi").get<double>();
        q.v = p.at("v").get<double>();
        if (!p.at("s").is_null()) q.s = p.at("s").get<double>();
        curve.points.push_back(q);
    }
    return curve;
}

Series envelope_series(const EnvelopeLocus& locus, std::string label) {
    Series s;
    s.label = std::move(label);
    s.kind = "envelope";
    s.curve.family.regime = locus.family_tag;
    s.curve.normalized = true;
    // Vertical points: psi = +pi/2 where xi and U share a sign, -pi/2 otherwise.
    const double psi = locus.xi_sign * locus.height_sign * std::numbers::pi / 2;
    for (const auto& p : locus.points) s.curve.points.push_back(CurvePoint::at(p.xi, p.height, psi));
    return s;
}

void write_figure_csv(std::ostream& os, const FigureData& figure, int precision) {
    os << "# " << figure.title << '\n';
    for (std::size_t i = 0; i < figure.series.size(); ++i) {
        const Series& s = figure.series[i];
        os << "# series " << i << ": label=" << s.label << " kind=" << s.kind
           << " regime=" << to_string(s.curve.family.regime);
        if (s.force) os << " force=" << format_number(*s.force, precision);
        os << '\n';
    }
    os << "series," << kCurveHeader << ",force,curvature,curvature_sign\n";
    for (std::size_t i = 0; i < figure.series.size(); ++i) {
        const Series& s = figure.series[i];
        for (const auto& p : s.curve.points) {
            os << i << ',' << point_row(p, s.curve.family, precision) << ',';
            if (s.force) os << format_number(*s.force, precision);
            const double k = curvature_at(p);
            os << ',' << format_number(k, precision) << ',' << (k > 0.0 ? 1 : k < 0.0 ? -1 : 0) << '\n';
        }
    }
}

void write_figure_json(std::ostream& os, const FigureData& figure, int precision) {
    json doc{{"title", figure.title}, {"series", json::array()}};
    for (const Series& s : figure.series) {
        json entry = curve_json(s.curve, precision);
        entry["label"] = s.label;
        entry["kind"] = s.kind;
        entry["force"] = s.force ? json(round_to(*s.force, precision)) : json(nullptr);
        doc["series"].push_back(std::move(entry));
    }
    os << doc.dump(2) << '\n';
}

void write_svg(std::ostream& os, const FigureData& figure) {
    constexpr double width = 800.0, height = 600.0, pad = 40.0;
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const Series& s : figure.series) {
        for (const auto& p : s.curve.points) {
            if (!std::isfinite(p.xi) || !std::isfinite(p.height)) continue;
            xmin = std::min(xmin, p.xi);
            xmax = std::max(xmax, p.xi);
            ymin = std::min(ymin, p.height);
            ymax = std::max(ymax, p.height);
        }
    }
    if (!(xmin <= xmax)) xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;
    ymin = std::min(ymin, 0.0);
    ymax = std::max(ymax, 0.0);
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    // Equal scales keep the curvature of the meniscus visible.
    const double scale = std::min((width - 2 * pad) / (xmax - xmin), (height - 2 * pad) / (ymax - ymin));
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    const auto px = [&](double x) { return width / 2 + (x - cx) * scale; };
    const auto py = [&](double y) { return height / 2 - (y - cy) * scale; };
    const auto fixed = [](double v) {
        char buf[64];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
        return std::string(buf, ec == std::errc{} ? ptr : buf);
    };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" height=\"600\">\n";
    os << "<title>" << figure.title << "</title>\n";
    os << "<line class=\"xi-axis\" x1=\"0\" y1=\"" << fixed(py(0.0)) << "\" x2=\"800\" y2=\"" << fixed(py(0.0))
       << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    for (const Series& s : figure.series) {
        const bool dashed = s.kind == "envelope";
        os << "<polyline class=\"" << s.kind << "\" data-label=\"" << s.label << "\" fill=\"none\" stroke=\""
           << (dashed ? "#c33" : "#036") << "\" stroke-width=\"1.5\"" << (dashed ? " stroke-dasharray=\"6 4\"" : "")
           << " points=\"";
        bool first = true;
        for (const auto& p : s.curve.points) {
            if (!std::isfinite(p.xi) || !std::isfinite(p.height)) continue;
            os << (first ? "" : " ") << fixed(px(p.xi)) << ',' << fixed(py(p.height));
            first = false;
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
}

void write_figure(std::ostream& os, const FigureData& figure, const OutputSpec& spec) {
    switch (spec.format) {
    case Format::Csv: write_figure_csv(os, figure, spec.precision); break;
    case Format::Json: write_figure_json(os, figure, spec.precision); break;
    case Format::Svg: write_svg(os, figure); break;
    }
}

} // namespace capillary::cli
