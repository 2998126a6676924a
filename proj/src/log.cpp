#include "stancelab/log.hpp"

#include <atomic>

#include "stancelab/errors.hpp"

namespace stancelab {

namespace {
std::atomic<LogLevel> g_level{LogLevel::warn};

const char* level_tag(LogLevel level) {
    switch (level) {
        case LogLevel::debug: return "debug";
        case LogLevel::info: return "info";
        case LogLevel::warn: return "warn";
        case LogLevel::error: return "error";
        case LogLevel::silent: return "silent";
    }
    return "?";
}
}  // namespace

LogLevel log_level() { return g_level.load(); }

void set_log_level(LogLevel level) { g_level.store(level); }

LogLevel parse_log_level(const std::string& name) {
    if (name == "debug") return LogLevel::debug;
    if (name == "info") return LogLevel::info;
    if (name == "warn") return LogLevel::warn;
    if (name == "error") return LogLevel::error;
    if (name == "silent") return LogLevel::silent;
    throw ConfigError("unknown log level: " + name);
}

void log_message(LogLevel level, const std::string& msg) {
    if (level < g_level.load()) return;
    std::fprintf(stderr, "[%s] %s\n", level_tag(level), msg.c_str());
}

}  // namespace stancelab
