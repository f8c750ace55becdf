#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tds/measurement.hpp"

namespace tds {

/// Per-sample dominance counts on the normalized time grid.
///
/// Grid point i sits at tau_i = 100 * i / grid_size, i = 0..grid_size.
/// counts[a][i] is the number of measurements whose dominant attribute at
/// tau_i is a; totals[i] is their sum N(tau_i). Invariants: totals is
/// non-decreasing (dominance persists once selected), totals[i] <=
/// panel_denominator, and totals.back() equals the number of measurements
/// with at least one event.
struct DominanceGrid {
    std::string sample_id;
    int grid_size = 100;
    std::size_t n_attributes = 0;
    int panel_denominator = 0; // measurements for this sample (= n_r * n_p when complete)
    std::vector<std::vector<int>> counts; // [attribute][grid point]
    std::vector<int> totals;              // N(tau_i)

    std::size_t point_count() const { return totals.size(); }
    double tau_value(std::size_t i) const {
        return 100.0 * static_cast<double>(i) / static_cast<double>(grid_size);
    }
};

/// Expands a sample's selection events into per-grid-point dominance counts.
/// Throws NotFoundError for an unknown sample id, DomainError for grid_size < 1
/// or invalid measurements.
DominanceGrid expand_dominance(const TdsDataset& dataset, std::string_view sample_id,
                               int grid_size = 100);

} // namespace tds
