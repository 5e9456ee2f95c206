#include "shapelab/log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string_view>

namespace shapelab {

namespace {

LogLevel from_env() {
    const char* v = std::getenv("SHAPELAB_LOG");
    if (!v) return LogLevel::error;
    const std::string_view s(v);
    if (s == "debug") return LogLevel::debug;
    if (s == "info") return LogLevel::info;
    return LogLevel::error;
}

std::atomic<int>& level_storage() {
    static std::atomic<int> level{static_cast<int>(from_env())};
    return level;
}

void emit(LogLevel lvl, const char* tag, const std::string& msg) {
    if (static_cast<int>(lvl) > level_storage().load()) return;
    static std::mutex mu;
    std::lock_guard lock(mu);
    std::cerr << "[shapelab " << tag << "] " << msg << '\n';
}

}  // namespace

LogLevel log_level() { return static_cast<LogLevel>(level_storage().load()); }
void set_log_level(LogLevel level) { level_storage().store(static_cast<int>(level)); }

void log_error(const std::string& msg) { emit(LogLevel::error, "error", msg); }
void log_info(const std::string& msg) { emit(LogLevel::info, "info", msg); }
void log_debug(const std::string& msg) { emit(LogLevel::debug, "debug", msg); }

}  // namespace shapelab
