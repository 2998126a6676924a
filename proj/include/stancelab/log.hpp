#pragma once

#include <cstdio>
#include <string>

namespace stancelab {

enum class LogLevel { debug = 0, info = 1, warn = 2, error = 3, silent = 4 };

LogLevel log_level();
void set_log_level(LogLevel level);
LogLevel parse_log_level(const std::string& name);

void log_message(LogLevel level, const std::string& msg);

inline void log_debug(const std::string& msg) { log_message(LogLevel::debug, msg); }
inline void log_info(const std::string& msg) { log_message(LogLevel::info, msg); }
inline void log_warn(const std::string& msg) { log_message(LogLevel::warn, msg); }
inline void log_error(const std::string& msg) { log_message(LogLevel::error, msg); }

}  // namespace stancelab
