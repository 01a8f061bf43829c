#pragma once

// Serialization of curves, envelopes and figure data as CSV, JSON and SVG.
// Numbers are written with std::to_chars and are locale independent.

#include "capillary/regions.hpp"
#include "capillary/types.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace capillary::cli {

enum class Format { Csv, Json, Svg };

std::optional<Format> format_from_string(std::string_view name) noexcept;

struct OutputSpec {
    Format format = Format::Csv;
    /// Empty or "-" for standard output.
    std::string path;
    int precision = 12;

    void validate() const;
};

/// Default precision: CAPILLARY_PRECISION if set and valid, else 12.
int default_precision();

/// Shortest representation with at most `precision` significant digits.
std::string format_number(double value, int precision);
/// Rounds to `precision` significant digits.
double round_to(double value, int precision);

void write_curve_csv(std::ostream& os, const SampledCurve& curve, int precision);
void write_curve_json(std::ostream& os, const SampledCurve& curve, int precision);
SampledCurve read_curve_csv(std::istream& is);
SampledCurve read_curve_json(std::istream& is);

/// A polyline of a figure: a solution curve or an envelope locus.
struct Series {
    std::string label;
    std::string kind = "curve";
    std::optional<double> force;
    SampledCurve curve;
};

struct FigureData {
    std::string title;
    std::vector<Series> series;
};

Series envelope_series(const EnvelopeLocus& locus, std::string label);

void write_figure_csv(std::ostream& os, const FigureData& figure, int precision);
void write_figure_json(std::ostream& os, const FigureData& figure, int precision);
/// Polylines in the fixed viewBox 0 0 800 600 with the xi-axis drawn.
void write_svg(std::ostream& os, const FigureData& figure);

void write_figure(std::ostream& os, const FigureData& figure, const OutputSpec& spec);

} // namespace capillary::cli
