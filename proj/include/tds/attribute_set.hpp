#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tds {

/// The declared, ordered list of texture attributes.
///
/// The set is fixed up front by the study design, independent of which
/// attributes are ever selected: the entropy normalization 1/log2(N_a)
/// depends on the declared count, including never-chosen attributes.
class AttributeSet {
public:
    /// Panelists reliably keep track of about this many attributes; larger
    /// sets are accepted but flagged by validation.
    static constexpr std::size_t kRecommendedMax = 10;

    /// Throws DomainError unless there are >= 2 distinct, non-empty labels
    /// free of CSV delimiter characters (',', ';', CR, LF).
    explicit AttributeSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& label(std::size_t idx) const;
    std::optional<std::size_t> index_of(std::string_view label) const;
    bool exceeds_recommended_size() const { return names_.size() > kRecommendedMax; }

    bool operator==(const AttributeSet&) const = default;

private:
    std::vector<std::string> names_;
};

} // namespace tds
