#include "riskmap/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace riskmap::log {

namespace {

Level parse_level() {
    const char* raw = std::getenv("RISKMAP_LOG");
    if (raw == nullptr) return Level::warn;
    const std::string v(raw);
    if (v == "error") return Level::error;
    if (v == "warn") return Level::warn;
    if (v == "info") return Level::info;
    if (v == "debug") return Level::debug;
    return Level::warn;
}

const char* tag(Level level) {
    switch (level) {
        case Level::error: return "error";
        case Level::warn: return "warn";
        case Level::info: return "info";
        case Level::debug: return "debug";
    }
    return "?";
}

std::mutex g_mutex;

}  // namespace

Level threshold() {
    static const Level cached = parse_level();
    return cached;
}

void write(Level level, const std::string& message) {
    if (static_cast<int>(level) > static_cast<int>(threshold())) return;
    std::lock_guard<std::mutex> lock(g_mutex);
    std::cerr << "[" << tag(level) << "] " << message << "\n";
}

}  // namespace riskmap::log
