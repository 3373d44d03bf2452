#pragma once

#include <string>

#include <json.hpp>

#include "vanorder/errors.hpp"

namespace vanorder {

/// Structural validator for the subset of JSON Schema the report schema uses:
/// "type" (string or array of strings), "properties" + "required",
/// "additionalProperties" (boolean), "items", and "enum".
inline bool validate_schema(const nlohmann::json& schema, const nlohmann::json& doc,
                            std::string* err = nullptr, const std::string& path = "$") {
  auto fail = [&](const std::string& msg) {
    if (err) *err = path + ": " + msg;
    return false;
  };
  if (schema.contains("enum")) {
    for (const auto& v : schema["enum"])
      if (v == doc) return true;
    return fail("value not in enum");
  }
  if (schema.contains("type")) {
    auto matches = [&](const std::string& t) {
      if (t == "object") return doc.is_object();
      if (t == "array") return doc.is_array();
      if (t == "string") return doc.is_string();
      if (t == "integer") return doc.is_number_integer();
      if (t == "number") return doc.is_number();
      if (t == "boolean") return doc.is_boolean();
      if (t == "null") return doc.is_null();
      return false;
    };
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) ok = ok || matches(t.get<std::string>());
    } else {
      ok = matches(schema["type"].get<std::string>());
    }
    if (!ok) return fail("type mismatch");
  }
  if (doc.is_object() && schema.contains("properties")) {
    if (schema.contains("required"))
      for (const auto& req : schema["required"])
        if (!doc.contains(req.get<std::string>()))
          return fail("missing required key '" + req.get<std::string>() + "'");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (schema["properties"].contains(it.key())) {
        if (!validate_schema(schema["properties"][it.key()], it.value(), err,
                             path + "." + it.key()))
          return false;
      } else if (schema.value("additionalProperties", true) == false) {
        return fail("unexpected key '" + it.key() + "'");
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < doc.size(); ++i)
      if (!validate_schema(schema["items"], doc[i], err, path + "[" + std::to_string(i) + "]"))
        return false;
  }
  return true;
}

}  // namespace vanorder
