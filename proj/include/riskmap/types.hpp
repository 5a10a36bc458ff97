#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace riskmap {

// Raised for malformed input files and invalid user-supplied values.
// The CLI maps this class to exit code 2.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a smoothed score query has no defined value (k = 0 and no
// reports for the queried key).
class UndefinedScoreError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Trim, lowercase (ASCII), collapse internal whitespace runs to one space.
std::string normalize_label(std::string_view raw);

// Optional synonym table mapping detector vocabulary onto database
// vocabulary ("range" -> "stove"). Lookups are applied after
// normalize_label; unknown labels pass through unchanged.
class AliasMap {
public:
    AliasMap() = default;

    static AliasMap load(const std::filesystem::path& path);

    void add(std::string_view alias, std::string_view canonical);
    std::string canonical(std::string_view label) const;
    std::size_t size() const { return table_.size(); }

private:
    std::map<std::string, std::string> table_;
};

// The configured accident-type vocabulary. Fixed for the lifetime of a
// RiskTable; its size is the smoothing denominator multiplier.
class AccidentTypes {
public:
    // Default vocabulary: cut, fire, trip_fall.
    AccidentTypes();
    explicit AccidentTypes(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int index) const { return labels_.at(index); }
    std::optional<int> index_of(std::string_view label) const;

    // Index of `label`, throwing ParseError when unknown.
    int require(std::string_view label) const;

    bool operator==(const AccidentTypes& other) const = default;

private:
    std::vector<std::string> labels_;
};

}  // namespace riskmap
