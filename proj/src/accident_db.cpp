#include "riskmap/accident_db.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <json.hpp>

#include "riskmap/log.hpp"

namespace riskmap {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::pair<std::string, std::string> pair_key(std::string_view o1, std::string_view o2) {
    std::string a(o1), b(o2);
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

}  // namespace

std::vector<AccidentRecord> load_records(const std::filesystem::path& path,
                                         const AccidentTypes& types,
                                         const AliasMap* aliases) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open accident database: " + path.string());

    std::vector<AccidentRecord> records;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::string where = path.string() + " line " + std::to_string(line_no);

        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError(where + ": " + e.what());
        }
        if (!j.is_object()) throw ParseError(where + ": expected a JSON object");

        AccidentRecord record;
        try {
            record.report_id = j.at("report_id").get<std::string>();
            record.accident_type = normalize_label(j.at("accident_type").get<std::string>());
            std::set<std::string> seen;
            for (const auto& obj : j.at("objects")) {
                std::string label = normalize_label(obj.get<std::string>());
                if (aliases != nullptr) label = aliases->canonical(label);
                if (label.empty()) throw ParseError(where + ": object label empty after normalization");
                if (seen.insert(label).second) record.objects.push_back(std::move(label));
            }
        } catch (const json::exception& e) {
            throw ParseError(where + ": " + e.what());
        }
        if (record.objects.empty()) throw ParseError(where + ": record lists no objects");
        if (!types.index_of(record.accident_type)) {
            throw ParseError(where + ": unknown accident type '" + record.accident_type + "'");
        }
        records.push_back(std::move(record));
    }
    return records;
}

RiskTable RiskTable::build(const std::vector<AccidentRecord>& records, int k,
                           const AccidentTypes& types) {
    if (k < 0) throw ParseError("smoothing pseudo-count k must be >= 0");
    RiskTable table(types, k);
    const int n = types.size();

    for (const auto& record : records) {
        const int type_idx = types.require(record.accident_type);
        table.grand_total_ += 1;
        for (const auto& object : record.objects) {
            auto& counts = table.objects_[object];
            if (counts.empty()) counts.assign(n, 0);
            counts[type_idx] += 1;
        }
        for (std::size_t i = 0; i < record.objects.size(); ++i) {
            for (std::size_t j = i + 1; j < record.objects.size(); ++j) {
                auto& counts = table.pairs_[pair_key(record.objects[i], record.objects[j])];
                if (counts.empty()) counts.assign(n, 0);
                counts[type_idx] += 1;
            }
        }
    }
    return table;
}

std::int64_t RiskTable::count(std::string_view object, std::string_view type) const {
    const auto it = objects_.find(std::string(object));
    if (it == objects_.end()) return 0;
    return it->second[types_.require(type)];
}

std::int64_t RiskTable::total(std::string_view object) const {
    const auto it = objects_.find(std::string(object));
    if (it == objects_.end()) return 0;
    std::int64_t sum = 0;
    for (auto c : it->second) sum += c;
    return sum;
}

std::int64_t RiskTable::pair_count(std::string_view o1, std::string_view o2,
                                   std::string_view type) const {
    const auto it = pairs_.find(pair_key(o1, o2));
    if (it == pairs_.end()) return 0;
    return it->second[types_.require(type)];
}

std::int64_t RiskTable::pair_total(std::string_view o1, std::string_view o2) const {
    const auto it = pairs_.find(pair_key(o1, o2));
    if (it == pairs_.end()) return 0;
    std::int64_t sum = 0;
    for (auto c : it->second) sum += c;
    return sum;
}

double RiskTable::smoothed(std::int64_t count, std::int64_t total, const std::string& key) const {
    const double denom = static_cast<double>(total) + static_cast<double>(k_) * types_.size();
    if (denom <= 0.0) {
        throw UndefinedScoreError("risk score undefined for '" + key +
                                  "': k = 0 and no reports");
    }
    return (static_cast<double>(count) + static_cast<double>(k_)) / denom;
}

double RiskTable::risk_score(std::string_view object, std::string_view type) const {
    return risk_score(object, types_.require(type));
}

double RiskTable::risk_score(std::string_view object, int type_index) const {
    const auto it = objects_.find(std::string(object));
    const std::int64_t c = it == objects_.end() ? 0 : it->second.at(type_index);
    std::int64_t t = 0;
    if (it != objects_.end()) {
        for (auto v : it->second) t += v;
    }
    return smoothed(c, t, std::string(object));
}

double RiskTable::accident_correlation(std::string_view o1, std::string_view o2,
                                       std::string_view type) const {
    return accident_correlation(o1, o2, types_.require(type));
}

double RiskTable::accident_correlation(std::string_view o1, std::string_view o2,
                                       int type_index) const {
    const auto it = pairs_.find(pair_key(o1, o2));
    const std::int64_t c = it == pairs_.end() ? 0 : it->second.at(type_index);
    std::int64_t t = 0;
    if (it != pairs_.end()) {
        for (auto v : it->second) t += v;
    }
    return smoothed(c, t, std::string(o1) + "+" + std::string(o2));
}

double RiskTable::report_share(std::string_view object) const {
    if (grand_total_ == 0) {
        if (!warned_empty_.exchange(true)) {
            log::warn("risk table has no reports; share filter disabled");
        }
        return 1.0;
    }
    return static_cast<double>(total(object)) / static_cast<double>(grand_total_);
}

bool RiskTable::passes_share_filter(std::string_view object, double theta_share) const {
    return report_share(object) >= theta_share;
}

void RiskTable::save(const std::filesystem::path& path) const {
    ordered_json j;
    j["k"] = k_;
    j["accident_types"] = types_.labels();
    j["grand_total"] = grand_total_;
    ordered_json objects = ordered_json::object();
    for (const auto& [label, counts] : objects_) objects[label] = counts;
    j["objects"] = std::move(objects);
    ordered_json pairs = ordered_json::array();
    for (const auto& [key, counts] : pairs_) {
        pairs.push_back({{"objects", {key.first, key.second}}, {"counts", counts}});
    }
    j["pairs"] = std::move(pairs);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write risk table: " + path.string());
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

RiskTable RiskTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open risk table: " + path.string());
    json j;
    try {
        j = json::parse(in);
        RiskTable table(AccidentTypes(j.at("accident_types").get<std::vector<std::string>>()),
                        j.at("k").get<int>());
        table.grand_total_ = j.at("grand_total").get<std::int64_t>();
        const std::size_t n = table.types_.labels().size();
        for (const auto& [label, counts] : j.at("objects").items()) {
            auto parsed = counts.get<Counts>();
            if (parsed.size() != n) throw ParseError("count vector length mismatch for " + label);
            table.objects_[label] = std::move(parsed);
        }
        for (const auto& entry : j.at("pairs")) {
            const auto objs = entry.at("objects").get<std::vector<std::string>>();
            auto counts = entry.at("counts").get<Counts>();
            if (objs.size() != 2 || counts.size() != n) {
                throw ParseError("malformed pair entry in " + path.string());
            }
            table.pairs_[pair_key(objs[0], objs[1])] = std::move(counts);
        }
        return table;
    } catch (const json::exception& e) {
        throw ParseError("risk table " + path.string() + ": " + e.what());
    }
}

}  // namespace riskmap
