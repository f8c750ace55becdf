#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tds/manifest.hpp"
#include "tds/measurement.hpp"
#include "tds/validation.hpp"

namespace tds {

/// Parses the event table (header exactly
/// `panelist,rep,sample,attribute,onset_s,swallow_s`, one row per selection
/// event, LF or CRLF). All findings, including structural CSV problems with
/// their line numbers and dataset invariant violations, land in `report`.
/// Returns the dataset when no errors were found, nullopt otherwise.
std::optional<TdsDataset> parse_events_csv(std::string_view text,
                                           const DatasetManifest& manifest,
                                           ValidationReport& report);

/// Throwing variant: raises ParseError carrying the first error when the
/// report contains any. Warnings are dropped; use the report variant to keep
/// them.
TdsDataset parse_events_csv(std::string_view text, const DatasetManifest& manifest);

/// Inverse of parsing: one row per event in canonical measurement order,
/// times serialized with 17 significant digits so the round trip is exact.
std::string write_events_csv(const TdsDataset& dataset);

} // namespace tds
