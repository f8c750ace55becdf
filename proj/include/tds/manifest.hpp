#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tds/attribute_set.hpp"
#include "tds/estimators.hpp"

namespace tds {

struct ManifestOptions {
    int grid_size = 100;
    Estimator estimator = Estimator::ChaoShen;
    DenominatorMode denominator = DenominatorMode::Active;

    bool operator==(const ManifestOptions&) const = default;
};

/// Declared study design: the attribute universe (which fixes N_a and hence
/// the entropy normalization even for never-chosen attributes), the number of
/// repetitions, optional sample descriptions, and analysis defaults.
struct DatasetManifest {
    AttributeSet attributes;
    int repetitions = 1; // n_r
    std::map<std::string, std::string> samples;
    ManifestOptions options;
    std::vector<std::string> warnings; // e.g. more than 10 attributes declared
};

/// Parses the JSON manifest document:
///   { "attributes": [...], "n_r": 3,
///     "samples": {"id": "description", ...},
///     "options": {"grid_size": 100, "estimator": "chao-shen",
///                 "denominator": "active"} }
/// samples and options are optional. Throws ParseError on malformed JSON,
/// missing/unknown keys, duplicate attributes, or N_a < 2.
DatasetManifest parse_manifest(std::string_view text);

/// Deterministic JSON emission; parse_manifest(write_manifest(m)) == m up to
/// warnings.
std::string write_manifest(const DatasetManifest& manifest);

} // namespace tds
