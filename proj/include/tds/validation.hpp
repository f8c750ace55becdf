#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tds/measurement.hpp"

namespace tds {

enum class Severity { Warning, Error };

struct ValidationIssue {
    Severity severity = Severity::Error;
    std::string location; // "line 12", "measurement (p1, rep 2, gel)", "sample gel", ...
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    void add_error(std::string location, std::string message);
    void add_warning(std::string location, std::string message);
    void merge(const ValidationReport& other);

    bool has_errors() const;
    std::size_t error_count() const;
    std::size_t warning_count() const;

    /// One "error: <location>: <message>" / "warning: ..." line per issue.
    std::string to_text() const;
};

/// Checks every dataset invariant. Errors: onsets not strictly increasing,
/// onset outside [0, T], T <= 0, duplicate (panelist, rep, sample) triples,
/// attribute index out of range, malformed ids. Warnings: measurements with
/// no events, per-sample counts differing from n_p * n_r (the effective
/// denominator is the actual count), more than 10 declared attributes.
ValidationReport validate_dataset(const TdsDataset& dataset);

} // namespace tds
