#pragma once

#include <span>
#include <string>
#include <vector>

#include "tds/dominance_grid.hpp"
#include "tds/estimators.hpp"

namespace tds {

struct DominanceSeries {
    std::string label;
    std::vector<CurvePoint> points;
};

/// Classic TDS plot data: one panel-mode dominance rate series per attribute
/// plus the chance level 1/N_a.
struct TdsCurves {
    std::string sample_id;
    std::vector<DominanceSeries> attribute_series;
    double chance_level = 0.0;
};

TdsCurves tds_curves(const DominanceGrid& grid);

/// Shape summary of an entropy curve, computed over non-no-data points only.
/// h_swallow is the last defined point's value (H(100) on grid curves);
/// tau_argmax takes the smallest tau attaining the maximum.
struct CurveFeatures {
    double first_defined_tau = 0.0;
    double h_first = 0.0;
    double h_max = 0.0;
    double tau_argmax = 0.0;
    double h_swallow = 0.0;
    bool rise_then_fall = false; // h_max > h_first and h_swallow < h_max
};

/// Throws DomainError when every point is no-data.
CurveFeatures curve_features(const EntropyCurve& curve);

/// Centered moving average with an odd window. No-data points pass through
/// unchanged and are excluded from their neighbors' averages. window = 1 is
/// the identity.
std::vector<CurvePoint> smooth_centered(std::span<const CurvePoint> points, int window);

} // namespace tds
