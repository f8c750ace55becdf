#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tds/estimators.hpp"

namespace tds {

/// One named series in the curve CSV schema
/// `sample,estimator,denominator,tau,value,flags`. The estimator column
/// carries "plugin"/"chao-shen" for entropy curves, "complexity" for
/// complexity curves, and the attribute label (or "chance") for dominance
/// rate series.
struct CurveSeries {
    std::string sample;
    std::string series;
    std::string denominator;
    std::vector<CurvePoint> points;

    bool operator==(const CurveSeries&) const = default;
};

CurveSeries to_series(const EntropyCurve& curve);
CurveSeries to_series(const ComplexityCurve& curve);

/// Deterministic CSV emission, one data row per point. Values use 17
/// significant digits (bit-exact round trip); flags are ";"-joined.
/// Throws DomainError when no series or an empty series is given.
std::string write_curve_csv(std::span<const CurveSeries> series);
std::string write_curve_csv(const EntropyCurve& curve);
std::string write_curve_csv(const ComplexityCurve& curve);

/// Parses a curve CSV into its series, grouped by (sample, estimator,
/// denominator) in first-appearance order. parse(write(x)) == x.
std::vector<CurveSeries> parse_curve_csv(std::string_view text);

/// 17-significant-digit formatting. format_value guarantees a decimal point
/// (or exponent) so value columns read as reals; format_tau emits the plain
/// shortest %.17g form.
std::string format_value(double v);
std::string format_tau(double v);

} // namespace tds
