#include "riskmap/types.hpp"

#include <cctype>
#include <fstream>
#include <set>

namespace riskmap {

std::string normalize_label(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

AliasMap AliasMap::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open alias file: " + path.string());
    AliasMap map;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ParseError("alias file " + path.string() + " line " +
                             std::to_string(line_no) + ": expected alias<TAB>canonical");
        }
        const std::string alias = normalize_label(line.substr(0, tab));
        const std::string canonical = normalize_label(line.substr(tab + 1));
        if (alias.empty() || canonical.empty()) {
            throw ParseError("alias file " + path.string() + " line " +
                             std::to_string(line_no) + ": empty label");
        }
        map.add(alias, canonical);
    }
    return map;
}

void AliasMap::add(std::string_view alias, std::string_view canonical) {
    table_[normalize_label(alias)] = normalize_label(canonical);
}

std::string AliasMap::canonical(std::string_view label) const {
    const auto it = table_.find(std::string(label));
    return it == table_.end() ? std::string(label) : it->second;
}

AccidentTypes::AccidentTypes() : labels_{"cut", "fire", "trip_fall"} {}

AccidentTypes::AccidentTypes(std::vector<std::string> labels) {
    if (labels.empty()) throw ParseError("accident type set must be non-empty");
    std::set<std::string> seen;
    for (auto& l : labels) {
        l = normalize_label(l);
        if (l.empty()) throw ParseError("accident type label is empty after normalization");
        if (!seen.insert(l).second) throw ParseError("duplicate accident type label: " + l);
    }
    labels_ = std::move(labels);
}

std::optional<int> AccidentTypes::index_of(std::string_view label) const {
    for (int i = 0; i < size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

int AccidentTypes::require(std::string_view label) const {
    const auto idx = index_of(label);
    if (!idx) throw ParseError("unknown accident type: '" + std::string(label) + "'");
    return *idx;
}

}  // namespace riskmap
