#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tds/attribute_set.hpp"

namespace tds {

/// One panelist selection: `attribute_idx` becomes dominant at `onset_s`
/// seconds after intake and stays dominant until the next selection.
struct SelectionEvent {
    std::size_t attribute_idx = 0;
    double onset_s = 0.0;

    bool operator==(const SelectionEvent&) const = default;
};

/// One panelist x repetition x sample mastication, from intake (t = 0) to
/// swallowing (t = swallow_s). Event onsets are strictly increasing; an empty
/// event list means the panelist never selected (validation warns).
struct Measurement {
    std::string panelist_id;
    int repetition_idx = 1;
    std::string sample_id;
    double swallow_s = 0.0;
    std::vector<SelectionEvent> events;

    /// Diagnostic key, e.g. "(p1, rep 2, gel)".
    std::string key() const;

    bool operator==(const Measurement&) const = default;
};

/// A full TDS study: declared attributes plus all measurements.
/// Measurements are kept in canonical (panelist, repetition, sample) order so
/// ingestion is insensitive to input row order.
struct TdsDataset {
    AttributeSet attributes;
    std::vector<Measurement> measurements;
    int declared_repetitions = 1; // n_r

    /// n_p: number of distinct panelists.
    std::size_t panelist_count() const;

    /// Distinct sample ids in ascending order.
    std::vector<std::string> sample_ids() const;

    std::vector<const Measurement*> sample_measurements(std::string_view sample_id) const;

    bool operator==(const TdsDataset&) const = default;
};

/// Maps a time in seconds onto the normalized 0-100 mastication scale:
/// tau = 100 * onset_s / swallow_s. Throws DomainError when onset_s is
/// outside [0, swallow_s] or swallow_s <= 0.
double normalize_onset(double onset_s, double swallow_s);

/// Attribute dominant at normalized time tau, or nullopt during the lag
/// before the first selection. Each event holds over [onset_i, onset_{i+1})
/// in normalized time; the final event extends through tau = 100.
std::optional<std::size_t> dominant_at(const Measurement& m, double tau);

/// Canonical (panelist, repetition, sample) ordering.
void sort_measurements(std::vector<Measurement>& measurements);

} // namespace tds
