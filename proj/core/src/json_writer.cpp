#include "qrhc/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qrhc {

std::string format_json_double(double x) {
  if (std::isnan(x)) return "\"nan\"";
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

JsonValue& JsonValue::append(JsonValue v) {
  if (is_null()) v_ = Array{};
  if (!is_array()) throw std::logic_error("JsonValue::append on non-array");
  std::get<Array>(v_).push_back(std::move(v));
  return *this;
}

JsonValue& JsonValue::set(std::string key, JsonValue v) {
  if (is_null()) v_ = Object{};
  if (!is_object()) throw std::logic_error("JsonValue::set on non-object");
  std::get<Object>(v_).emplace_back(std::move(key), std::move(v));
  return *this;
}

namespace {

void pad(std::string& out, int indent, int depth) {
  if (indent < 0) return;
  out += '\n';
  out.append(static_cast<std::size_t>(indent) * depth, ' ');
}

}  // namespace

void JsonValue::write(std::string& out, int indent, int depth) const {
  if (std::holds_alternative<std::nullptr_t>(v_)) {
    out += "null";
  } else if (const bool* b = std::get_if<bool>(&v_)) {
    out += *b ? "true" : "false";
  } else if (const std::int64_t* i = std::get_if<std::int64_t>(&v_)) {
    out += std::to_string(*i);
  } else if (const double* d = std::get_if<double>(&v_)) {
    out += format_json_double(*d);
  } else if (const std::string* s = std::get_if<std::string>(&v_)) {
    out += '"';
    out += json_escape(*s);
    out += '"';
  } else if (const Array* a = std::get_if<Array>(&v_)) {
    if (a->empty()) {
      out += "[]";
      return;
    }
    out += '[';
    for (std::size_t k = 0; k < a->size(); ++k) {
      if (k) out += ',';
      pad(out, indent, depth + 1);
      (*a)[k].write(out, indent, depth + 1);
    }
    pad(out, indent, depth);
    out += ']';
  } else {
    const Object& o = std::get<Object>(v_);
    if (o.empty()) {
      out += "{}";
      return;
    }
    out += '{';
    for (std::size_t k = 0; k < o.size(); ++k) {
      if (k) out += ',';
      pad(out, indent, depth + 1);
      out += '"';
      out += json_escape(o[k].first);
      out += "\":";
      if (indent >= 0) out += ' ';
      o[k].second.write(out, indent, depth + 1);
    }
    pad(out, indent, depth);
    out += '}';
  }
}

std::string JsonValue::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  return out;
}

}  // namespace qrhc
