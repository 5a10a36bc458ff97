#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "riskmap/types.hpp"

namespace riskmap {

// One real-world accident report: the objects involved and the accident
// type. Object labels are normalized and deduplicated per record.
struct AccidentRecord {
    std::string report_id;
    std::vector<std::string> objects;
    std::string accident_type;
};

// Load line-delimited JSON records ({"report_id", "objects", "accident_type"}).
// Labels are normalized (and alias-mapped when `aliases` is given); duplicate
// objects within one record are dropped, keeping first occurrence. Malformed
// lines and unknown accident types raise ParseError naming the line.
std::vector<AccidentRecord> load_records(const std::filesystem::path& path,
                                         const AccidentTypes& types,
                                         const AliasMap* aliases = nullptr);

// Smoothed per-object and per-pair accident statistics. Immutable after
// build(); safe for concurrent reads.
class RiskTable {
public:
    using Counts = std::vector<std::int64_t>;  // indexed by accident-type index

    // Tallies every record. Pair counts are incremented once per unordered
    // object pair per record. Throws ParseError for records whose type is
    // not in `types`, or k < 0.
    static RiskTable build(const std::vector<AccidentRecord>& records, int k,
                           const AccidentTypes& types);

    const AccidentTypes& types() const { return types_; }
    int k() const { return k_; }
    std::int64_t grand_total() const { return grand_total_; }

    std::int64_t count(std::string_view object, std::string_view type) const;
    std::int64_t total(std::string_view object) const;
    std::int64_t pair_count(std::string_view o1, std::string_view o2,
                            std::string_view type) const;
    std::int64_t pair_total(std::string_view o1, std::string_view o2) const;

    // Smoothed single-object score (count + k) / (total + k*N). Objects
    // absent from the table get the uniform prior 1/N. Throws
    // UndefinedScoreError when k = 0 and the object has no reports.
    double risk_score(std::string_view object, std::string_view type) const;
    double risk_score(std::string_view object, int type_index) const;

    // Smoothed pairwise accident correlation, symmetric in its object
    // arguments. Pairs never co-occurring get the uniform prior 1/N.
    double accident_correlation(std::string_view o1, std::string_view o2,
                                std::string_view type) const;
    double accident_correlation(std::string_view o1, std::string_view o2,
                                int type_index) const;

    // Fraction of all reports involving `object`. Returns 1.0 for every
    // object when the table is empty (filter disabled; logged once).
    double report_share(std::string_view object) const;

    // True iff the object's share of all reports reaches `theta_share`
    // (inclusive). Objects below the threshold keep their scores but are
    // excluded as propagation sources.
    bool passes_share_filter(std::string_view object, double theta_share) const;

    // Canonical serialization; save() output is byte-stable across runs.
    void save(const std::filesystem::path& path) const;
    static RiskTable load(const std::filesystem::path& path);

    const std::map<std::string, Counts>& object_counts() const { return objects_; }
    const std::map<std::pair<std::string, std::string>, Counts>& pair_counts() const {
        return pairs_;
    }

private:
    RiskTable(AccidentTypes types, int k) : types_(std::move(types)), k_(k) {}

    double smoothed(std::int64_t count, std::int64_t total, const std::string& key) const;

    AccidentTypes types_;
    int k_ = 1;
    std::int64_t grand_total_ = 0;
    std::map<std::string, Counts> objects_;
    std::map<std::pair<std::string, std::string>, Counts> pairs_;
    mutable std::atomic<bool> warned_empty_{false};
};

}  // namespace riskmap
