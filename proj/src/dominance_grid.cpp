#include "tds/dominance_grid.hpp"

#include <algorithm>

#include "tds/errors.hpp"

namespace tds {

DominanceGrid expand_dominance(const TdsDataset& dataset, std::string_view sample_id,
                               int grid_size) {
    if (grid_size < 1) {
        throw DomainError("grid size must be >= 1");
    }
    auto measurements = dataset.sample_measurements(sample_id);
    if (measurements.empty()) {
        throw NotFoundError("sample '" + std::string(sample_id) + "' not present in dataset");
    }

    DominanceGrid grid;
    grid.sample_id = std::string(sample_id);
    grid.grid_size = grid_size;
    grid.n_attributes = dataset.attributes.size();
    grid.panel_denominator = static_cast<int>(measurements.size());

    const std::size_t n_points = static_cast<std::size_t>(grid_size) + 1;
    std::vector<double> taus(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        taus[i] = grid.tau_value(i);
    }
    grid.counts.assign(grid.n_attributes, std::vector<int>(n_points, 0));
    grid.totals.assign(n_points, 0);

    // Each event covers the grid points in [onset_k, onset_{k+1}) of
    // normalized time; the last event runs through tau = 100. Boundaries are
    // located with lower_bound on the same tau values dominant_at compares
    // against, so both routes agree bit for bit.
    for (const Measurement* m : measurements) {
        const auto& events = m->events;
        for (std::size_t k = 0; k < events.size(); ++k) {
            if (events[k].attribute_idx >= grid.n_attributes) {
                throw DomainError("measurement " + m->key() + " references attribute index " +
                                  std::to_string(events[k].attribute_idx) + " but N_a = " +
                                  std::to_string(grid.n_attributes));
            }
            double begin_tau = normalize_onset(events[k].onset_s, m->swallow_s);
            auto begin = std::lower_bound(taus.begin(), taus.end(), begin_tau) - taus.begin();
            auto end = static_cast<std::ptrdiff_t>(n_points);
            if (k + 1 < events.size()) {
                double end_tau = normalize_onset(events[k + 1].onset_s, m->swallow_s);
                end = std::lower_bound(taus.begin(), taus.end(), end_tau) - taus.begin();
            }
            auto& row = grid.counts[events[k].attribute_idx];
            for (auto i = begin; i < end; ++i) {
                ++row[static_cast<std::size_t>(i)];
                ++grid.totals[static_cast<std::size_t>(i)];
            }
        }
    }
    return grid;
}

} // namespace tds
