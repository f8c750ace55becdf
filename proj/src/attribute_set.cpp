#include "tds/attribute_set.hpp"

#include <algorithm>
#include <set>

#include "tds/errors.hpp"

namespace tds {

namespace {

bool has_delimiter(std::string_view label) {
    return label.find_first_of(",;\r\n") != std::string_view::npos;
}

} // namespace

AttributeSet::AttributeSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() < 2) {
        throw DomainError("attribute set needs at least 2 attributes (got " +
                          std::to_string(names_.size()) + "); 1/log2(N_a) is undefined below that");
    }
    std::set<std::string_view> seen;
    for (const auto& name : names_) {
        if (name.empty()) {
            throw DomainError("attribute labels must be non-empty");
        }
        if (has_delimiter(name)) {
            throw DomainError("attribute label '" + name +
                              "' contains a CSV delimiter character (',', ';', CR or LF)");
        }
        if (!seen.insert(name).second) {
            throw DomainError("duplicate attribute label '" + name + "'");
        }
    }
}

const std::string& AttributeSet::label(std::size_t idx) const {
    if (idx >= names_.size()) {
        throw DomainError("attribute index " + std::to_string(idx) + " out of range (N_a = " +
                          std::to_string(names_.size()) + ")");
    }
    return names_[idx];
}

std::optional<std::size_t> AttributeSet::index_of(std::string_view label) const {
    auto it = std::find(names_.begin(), names_.end(), label);
    if (it == names_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - names_.begin());
}

} // namespace tds
