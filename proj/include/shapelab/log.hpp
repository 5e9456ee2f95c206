#pragma once

#include <string>

namespace shapelab {

enum class LogLevel { error = 0, info = 1, debug = 2 };

/// Level from the SHAPELAB_LOG environment variable (error | info | debug);
/// defaults to error. Read once.
LogLevel log_level();
void set_log_level(LogLevel level);

void log_error(const std::string& msg);
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

}  // namespace shapelab
