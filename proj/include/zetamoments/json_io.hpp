#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace zm {

using Json = nlohmann::ordered_json;

// Compact serialization with every floating-point value printed to 17
// significant digits; non-finite values become null.
inline void write_json(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        write_json(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        write_json(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
      } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out += buf;
      }
      break;
    }
    default: out += j.dump(); break;
  }
}

inline std::string to_json_string(const Json& j) {
  std::string out;
  write_json(j, out);
  return out;
}

}  // namespace zm
