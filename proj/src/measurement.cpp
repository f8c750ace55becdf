#include "tds/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "tds/errors.hpp"

namespace tds {

std::string Measurement::key() const {
    return "(" + panelist_id + ", rep " + std::to_string(repetition_idx) + ", " + sample_id + ")";
}

std::size_t TdsDataset::panelist_count() const {
    std::set<std::string_view> ids;
    for (const auto& m : measurements) {
        ids.insert(m.panelist_id);
    }
    return ids.size();
}

std::vector<std::string> TdsDataset::sample_ids() const {
    std::set<std::string> ids;
    for (const auto& m : measurements) {
        ids.insert(m.sample_id);
    }
    return {ids.begin(), ids.end()};
}

std::vector<const Measurement*> TdsDataset::sample_measurements(std::string_view sample_id) const {
    std::vector<const Measurement*> out;
    for (const auto& m : measurements) {
        if (m.sample_id == sample_id) {
            out.push_back(&m);
        }
    }
    return out;
}

double normalize_onset(double onset_s, double swallow_s) {
    if (!(swallow_s > 0.0) || !std::isfinite(swallow_s)) {
        throw DomainError("swallow time must be a positive finite number of seconds");
    }
    if (!(onset_s >= 0.0) || onset_s > swallow_s) {
        throw DomainError("onset " + std::to_string(onset_s) + " s outside [0, " +
                          std::to_string(swallow_s) + " s]");
    }
    return 100.0 * onset_s / swallow_s;
}

std::optional<std::size_t> dominant_at(const Measurement& m, double tau) {
    if (!(tau >= 0.0) || tau > 100.0) {
        throw DomainError("normalized time " + std::to_string(tau) + " outside [0, 100]");
    }
    std::optional<std::size_t> dominant;
    for (const auto& event : m.events) {
        if (normalize_onset(event.onset_s, m.swallow_s) <= tau) {
            dominant = event.attribute_idx;
        } else {
            break;
        }
    }
    return dominant;
}

void sort_measurements(std::vector<Measurement>& measurements) {
    std::sort(measurements.begin(), measurements.end(), [](const Measurement& a, const Measurement& b) {
        return std::tie(a.panelist_id, a.repetition_idx, a.sample_id) <
               std::tie(b.panelist_id, b.repetition_idx, b.sample_id);
    });
}

} // namespace tds
