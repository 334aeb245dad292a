#pragma once

#include <string>

namespace wikivote {

enum class LogLevel { quiet = 0, error, warn, info, debug };

// Parsed once from the WIKIVOTE_LOG environment variable
// (quiet|error|warn|info|debug); defaults to warn.
LogLevel log_level();

void log_error(const std::string& message);
void log_warn(const std::string& message);
void log_info(const std::string& message);
void log_debug(const std::string& message);

}  // namespace wikivote
