#include "halfrep/output.hpp"

#include "halfrep/errors.hpp"

namespace halfrep {

std::optional<Format> parse_format(std::string_view text) {
  if (text == "human") return Format::human;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  return std::nullopt;
}

OutputRecord& OutputRecord::add(std::string key, Value value) {
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

const OutputRecord::Value* OutputRecord::find(std::string_view key) const {
  for (const auto& [k, v] : fields_) {
    if (k == key) return &v;
  }
  return nullptr;
}

Integer OutputRecord::integer(std::string_view key) const {
  const Value* v = find(key);
  if (!v) throw DomainError("record has no field '" + std::string(key) + "'");
  if (const auto* i = std::get_if<Integer>(v)) return *i;
  if (const auto* l = std::get_if<long>(v)) return Integer(*l);
  return parse_integer(std::get<std::string>(*v));
}

nlohmann::ordered_json OutputRecord::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind_;
  for (const auto& [key, value] : fields_) {
    std::visit(
        [&, &key = key](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Integer>) {
            j[key] = to_string(v);
          } else {
            j[key] = v;
          }
        },
        value);
  }
  return j;
}

std::string OutputRecord::to_json_line() const { return to_json().dump(); }

OutputRecord OutputRecord::from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw DomainError("output record must be an object with a string 'kind'");
  }
  OutputRecord r(j["kind"].get<std::string>());
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") continue;
    if (value.is_string()) {
      r.add(key, value.get<std::string>());
    } else if (value.is_number_integer()) {
      r.add(key, value.get<long>());
    } else {
      throw DomainError("unsupported value type for field '" + key + "'");
    }
  }
  return r;
}

OutputRecord OutputRecord::parse_json_line(std::string_view line) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed record: ") + e.what());
  }
  return from_json(j);
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

} // namespace halfrep
