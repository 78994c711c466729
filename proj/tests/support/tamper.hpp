#pragma once

// Single-field mutations of a certificate: every leaf changed, every object
// key dropped, one stray key added per object.

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace tamper {

using nlohmann::json;

struct Mutation {
  std::string where;
  json certificate;
};

inline void leaves(const json& j, const json::json_pointer& at,
                   const std::function<void(const json::json_pointer&, const json&)>& visit) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) leaves(v, at / k, visit);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) leaves(j[i], at / i, visit);
  } else {
    visit(at, j);
  }
}

inline void containers(const json& j, const json::json_pointer& at,
                       const std::function<void(const json::json_pointer&, const json&)>& visit) {
  if (!j.is_structured()) return;
  visit(at, j);
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) containers(v, at / k, visit);
  } else {
    for (std::size_t i = 0; i < j.size(); ++i) containers(j[i], at / i, visit);
  }
}

// "p/q" -> "(p+q)/q": still a well-formed rational, off by one.
inline std::string bump(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos || slash == 0) return s + "x";
  try {
    const long p = std::stol(s.substr(0, slash));
    const long q = std::stol(s.substr(slash + 1));
    if (q <= 0) return s + "x";
    return std::to_string(p + q) + "/" + std::to_string(q);
  } catch (const std::exception&) {
    return s + "x";
  }
}

inline std::vector<Mutation> mutations(const json& c) {
  std::vector<Mutation> out;
  leaves(c, json::json_pointer(), [&](const json::json_pointer& at, const json& v) {
    json m = c;
    if (v.is_string()) {
      m[at] = bump(v.get<std::string>());
    } else if (v.is_boolean()) {
      m[at] = !v.get<bool>();
    } else if (v.is_number_unsigned()) {
      m[at] = v.get<std::size_t>() + 1;
    } else if (v.is_number()) {
      m[at] = v.get<long>() + 1;
    } else if (v.is_null()) {
      m[at] = 0;
    } else if (v.is_array()) {
      m[at] = json::array({0});
    } else {
      m[at] = json{{"x", 0}};
    }
    out.push_back({"change " + at.to_string(), std::move(m)});
  });
  containers(c, json::json_pointer(), [&](const json::json_pointer& at, const json& v) {
    if (v.is_object()) {
      for (const auto& [k, unused] : v.items()) {
        json m = c;
        m[at].erase(k);
        out.push_back({"drop " + (at / k).to_string(), std::move(m)});
      }
      json m = c;
      m[at]["~extra"] = 0;
      out.push_back({"add key under " + at.to_string(), std::move(m)});
    } else if (!v.empty()) {
      json m = c;
      m[at].erase(m[at].size() - 1);
      out.push_back({"shorten " + at.to_string(), std::move(m)});
    }
  });
  return out;
}

}  // namespace tamper
