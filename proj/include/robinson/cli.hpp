#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "robinson/core.hpp"

namespace robinson::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kInputError = 2, kRefused = 3, kInternal = 4 };

/// What a command prints. Extras are (key, JSON text) pairs appended after
/// the common fields.
struct RunReport {
  std::string command;
  std::string answer;
  std::optional<std::int64_t> xi;
  std::optional<std::vector<Vertex>> order;
  std::optional<std::vector<Arc>> orientation;
  std::vector<std::pair<std::string, std::string>> extras;
  double elapsed_ms = 0;
};

std::string render_text(const RunReport& report);
/// Single-line JSON object.
std::string render_json(const RunReport& report);

/// Runs one command; `args` excludes the program name. Results go to `out`,
/// diagnostics and timing to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace robinson::cli
