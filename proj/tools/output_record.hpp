#pragma once

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

namespace rabot {

enum class RecordStatus { exact, proven, conjecture, refuted };

std::string_view to_string(RecordStatus status) noexcept;
RecordStatus parse_status(std::string_view text);

/// One machine-readable record per invocation. Numbers are carried as
/// decimal or "num/den" strings so nothing is rounded.
struct OutputRecord {
  std::string command;
  std::map<std::string, std::string> inputs;
  nlohmann::json result;
  RecordStatus status = RecordStatus::exact;

  nlohmann::json to_json() const;
  static OutputRecord from_json(const nlohmann::json& doc);

  std::string serialize() const;
  /// Throws std::invalid_argument on malformed input.
  static OutputRecord parse(std::string_view text);

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

}  // namespace rabot
