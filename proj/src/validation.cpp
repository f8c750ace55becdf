#include "tds/validation.hpp"

#include <cmath>
#include <map>
#include <set>

namespace tds {

void ValidationReport::add_error(std::string location, std::string message) {
    issues.push_back({Severity::Error, std::move(location), std::move(message)});
}

void ValidationReport::add_warning(std::string location, std::string message) {
    issues.push_back({Severity::Warning, std::move(location), std::move(message)});
}

void ValidationReport::merge(const ValidationReport& other) {
    issues.insert(issues.end(), other.issues.begin(), other.issues.end());
}

bool ValidationReport::has_errors() const {
    return error_count() > 0;
}

std::size_t ValidationReport::error_count() const {
    std::size_t n = 0;
    for (const auto& issue : issues) {
        if (issue.severity == Severity::Error) {
            ++n;
        }
    }
    return n;
}

std::size_t ValidationReport::warning_count() const {
    return issues.size() - error_count();
}

std::string ValidationReport::to_text() const {
    std::string out;
    for (const auto& issue : issues) {
        out += issue.severity == Severity::Error ? "error: " : "warning: ";
        out += issue.location;
        out += ": ";
        out += issue.message;
        out += '\n';
    }
    return out;
}

namespace {

bool bad_id(std::string_view id) {
    return id.empty() || id.find_first_of(",;\r\n") != std::string_view::npos;
}

} // namespace

ValidationReport validate_dataset(const TdsDataset& dataset) {
    ValidationReport report;
    const std::size_t n_attributes = dataset.attributes.size();

    if (dataset.attributes.exceeds_recommended_size()) {
        report.add_warning("attributes", std::to_string(n_attributes) +
                                             " attributes declared; panelists reliably track "
                                             "about 10, surplus ones tend to go unused");
    }
    if (dataset.declared_repetitions < 1) {
        report.add_error("dataset", "declared repetitions n_r must be >= 1");
    }

    std::set<std::string> seen_keys;
    std::map<std::string, int> per_sample;
    for (const auto& m : dataset.measurements) {
        const std::string key = m.key();
        if (bad_id(m.panelist_id)) {
            report.add_error(key, "panelist id must be non-empty and free of ',', ';', CR, LF");
        }
        if (bad_id(m.sample_id)) {
            report.add_error(key, "sample id must be non-empty and free of ',', ';', CR, LF");
        }
        if (m.repetition_idx < 1) {
            report.add_error(key, "repetition index must be >= 1");
        }
        if (!seen_keys.insert(key).second) {
            report.add_error(key, "duplicate (panelist, repetition, sample) triple");
        }
        ++per_sample[m.sample_id];

        if (!(m.swallow_s > 0.0) || !std::isfinite(m.swallow_s)) {
            report.add_error(key, "swallow time must be a positive finite number of seconds");
            continue;
        }
        if (m.events.empty()) {
            report.add_warning(key, "no selection events; measurement counts toward the panel "
                                    "denominator but contributes no dominance");
        }
        double prev_onset = -1.0;
        bool increasing = true;
        for (const auto& event : m.events) {
            if (event.attribute_idx >= n_attributes) {
                report.add_error(key, "attribute index " + std::to_string(event.attribute_idx) +
                                          " out of range (N_a = " + std::to_string(n_attributes) +
                                          ")");
            }
            if (!(event.onset_s >= 0.0) || event.onset_s > m.swallow_s) {
                report.add_error(key, "event onset " + std::to_string(event.onset_s) +
                                          " s outside [0, swallow " +
                                          std::to_string(m.swallow_s) + " s]");
            }
            if (event.onset_s <= prev_onset) {
                increasing = false;
            }
            prev_onset = event.onset_s;
        }
        if (!increasing) {
            report.add_error(key, "event onsets must be strictly increasing (one dominant "
                                  "attribute at a time)");
        }
    }

    const long expected = static_cast<long>(dataset.panelist_count()) *
                          static_cast<long>(dataset.declared_repetitions);
    for (const auto& [sample, count] : per_sample) {
        if (count != expected) {
            report.add_warning("sample " + sample,
                               "design is incomplete: " + std::to_string(count) +
                                   " measurements vs n_p * n_r = " + std::to_string(expected) +
                                   "; effective panel denominator is " + std::to_string(count));
        }
    }
    return report;
}

} // namespace tds
