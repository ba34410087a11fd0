#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "halfrep/integer.hpp"

namespace halfrep {

enum class Format { human, json, csv };

std::optional<Format> parse_format(std::string_view text);

/// One machine-readable result. Big integers are written as JSON decimal
/// strings; small enumerations (delta, equation) as JSON numbers.
class OutputRecord {
public:
  using Value = std::variant<Integer, long, std::string>;

  explicit OutputRecord(std::string kind) : kind_(std::move(kind)) {}

  OutputRecord& add(std::string key, Value value);

  const std::string& kind() const noexcept { return kind_; }
  const std::vector<std::pair<std::string, Value>>& fields() const noexcept { return fields_; }
  const Value* find(std::string_view key) const;

  /// Field as an exact integer; accepts Integer, long or a decimal string.
  Integer integer(std::string_view key) const;

  nlohmann::ordered_json to_json() const;
  /// Compact single-line JSON without trailing newline.
  std::string to_json_line() const;

  /// Inverse of to_json. JSON strings come back as std::string values and
  /// JSON integers as long; integer() recovers exact values from either.
  static OutputRecord from_json(const nlohmann::ordered_json& j);
  static OutputRecord parse_json_line(std::string_view line);

private:
  std::string kind_;
  std::vector<std::pair<std::string, Value>> fields_;
};

/// Comma-joined fields; callers only pass digits, signs and labels.
std::string csv_line(const std::vector<std::string>& fields);

} // namespace halfrep
