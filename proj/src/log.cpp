#include "respoles/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace respoles {

namespace {

LogLevel parse_level(const char* s) {
  if (!s) return LogLevel::Warn;
  std::string v(s);
  if (v == "error") return LogLevel::Error;
  if (v == "warn") return LogLevel::Warn;
  if (v == "info") return LogLevel::Info;
  if (v == "debug") return LogLevel::Debug;
  return LogLevel::Warn;
}

const char* level_name(LogLevel level) {
  switch (level) {
    case LogLevel::Error:
      return "error";
    case LogLevel::Warn:
      return "warn";
    case LogLevel::Info:
      return "info";
    case LogLevel::Debug:
      return "debug";
  }
  return "?";
}

std::mutex& log_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

LogLevel log_level() {
  static LogLevel level = parse_level(std::getenv("RESPOLES_LOG"));
  return level;
}

void log_msg(LogLevel level, const std::string& msg) {
  if (static_cast<int>(level) > static_cast<int>(log_level())) return;
  std::lock_guard<std::mutex> lock(log_mutex());
  std::cerr << "[respoles " << level_name(level) << "] " << msg << "\n";
}

}  // namespace respoles
