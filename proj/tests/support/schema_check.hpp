#pragma once

// Minimal JSON Schema checker covering the keywords used by
// docs/report.schema.json: type, required, properties,
// additionalProperties, items, $ref into #/$defs, minimum.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "null") return v.is_null();
  return false;
}

inline void check(const json& root, const json& schema, const json& v, const std::string& path,
                  std::vector<std::string>& errors) {
  if (schema.contains("$ref")) {
    const std::string ref = schema["$ref"];
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) {
      errors.push_back(path + ": unsupported $ref " + ref);
      return;
    }
    check(root, root["$defs"][ref.substr(prefix.size())], v, path, errors);
    return;
  }
  if (schema.contains("type") && !type_matches(v, schema["type"].get<std::string>())) {
    errors.push_back(path + ": expected " + schema["type"].get<std::string>());
    return;
  }
  if (schema.contains("minimum") && v.is_number() && v.get<double>() < schema["minimum"].get<double>()) {
    errors.push_back(path + ": below minimum");
  }
  if (v.is_object()) {
    for (const auto& key : schema.value("required", json::array())) {
      if (!v.contains(key.get<std::string>())) errors.push_back(path + ": missing " + key.get<std::string>());
    }
    const json props = schema.value("properties", json::object());
    for (const auto& [key, value] : v.items()) {
      if (props.contains(key)) {
        check(root, props[key], value, path + "/" + key, errors);
      } else if (schema.contains("additionalProperties")) {
        const json& extra = schema["additionalProperties"];
        if (extra.is_boolean()) {
          if (!extra.get<bool>()) errors.push_back(path + ": unexpected property " + key);
        } else {
          check(root, extra, value, path + "/" + key, errors);
        }
      }
    }
  }
  if (v.is_array() && schema.contains("items")) {
    for (std::size_t n = 0; n < v.size(); ++n) {
      check(root, schema["items"], v[n], path + "/" + std::to_string(n), errors);
    }
  }
}

inline std::vector<std::string> validate(const json& schema, const json& doc) {
  std::vector<std::string> errors;
  check(schema, schema, doc, "", errors);
  return errors;
}

}  // namespace schema_check
