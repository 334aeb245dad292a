#include "wikivote/log.hpp"

#include <cstdlib>
#include <iostream>

#include "wikivote/text.hpp"

namespace wikivote {

namespace {

LogLevel parse_level() {
  const char* env = std::getenv("WIKIVOTE_LOG");
  if (!env) return LogLevel::warn;
  const std::string v = to_lower(env);
  if (v == "quiet" || v == "off" || v == "none") return LogLevel::quiet;
  if (v == "error") return LogLevel::error;
  if (v == "warn" || v == "warning") return LogLevel::warn;
  if (v == "info") return LogLevel::info;
  if (v == "debug") return LogLevel::debug;
  return LogLevel::warn;
}

void emit(LogLevel severity, const char* prefix, const std::string& message) {
  if (static_cast<int>(log_level()) >= static_cast<int>(severity))
    std::cerr << prefix << message << '\n';
}

}  // namespace

LogLevel log_level() {
  static const LogLevel level = parse_level();
  return level;
}

void log_error(const std::string& message) { emit(LogLevel::error, "[error] ", message); }
void log_warn(const std::string& message) { emit(LogLevel::warn, "[warn] ", message); }
void log_info(const std::string& message) { emit(LogLevel::info, "[info] ", message); }
void log_debug(const std::string& message) { emit(LogLevel::debug, "[debug] ", message); }

}  // namespace wikivote
