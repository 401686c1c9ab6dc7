#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dre::jsonl {

using json = nlohmann::json;

// Decode failure for a single line; surviving lines are still returned.
struct LineError {
  std::size_t line = 0;  // 1-based
  std::string message;
};

std::string dump_lines(const std::vector<json>& records);

// Parses one JSON object per non-empty line. Malformed lines are reported
// through `errors` (when non-null) and skipped.
std::vector<json> parse_lines(std::string_view text, std::vector<LineError>* errors = nullptr);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);
bool file_exists(const std::string& path);

}  // namespace dre::jsonl
