#include "liegate_cli/cli.hpp"

#include <cmath>
#include <cstdio>

namespace liegate::cli {

using nlohmann::json;

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void emit(const json& j, int indent, int depth, std::string& s) {
  const auto pad = [&](int d) {
    if (indent >= 0) {
      s += '\n';
      s.append(static_cast<std::size_t>(indent * d), ' ');
    }
  };
  switch (j.type()) {
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        s += "null";
      } else {
        s += fmt17(v);
      }
      break;
    }
    case json::value_t::object: {
      if (j.empty()) {
        s += "{}";
        break;
      }
      s += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) s += ',';
        first = false;
        pad(depth + 1);
        s += json(it.key()).dump();
        s += indent >= 0 ? ": " : ":";
        emit(it.value(), indent, depth + 1, s);
      }
      pad(depth);
      s += '}';
      break;
    }
    case json::value_t::array: {
      if (j.empty()) {
        s += "[]";
        break;
      }
      s += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) s += ',';
        first = false;
        pad(depth + 1);
        emit(v, indent, depth + 1, s);
      }
      pad(depth);
      s += ']';
      break;
    }
    default:
      s += j.dump();
  }
}

}  // namespace

std::string dump_json(const json& j, int indent) {
  std::string s;
  emit(j, indent, 0, s);
  s += '\n';
  return s;
}

}  // namespace liegate::cli
