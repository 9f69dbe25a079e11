#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qrhc {

// Deterministic JSON emission: objects keep insertion order, doubles print
// with 17 significant digits so identical inputs give byte-identical output.
class JsonValue {
 public:
  using Array = std::vector<JsonValue>;
  using Object = std::vector<std::pair<std::string, JsonValue>>;

  JsonValue() : v_(nullptr) {}
  JsonValue(std::nullptr_t) : v_(nullptr) {}
  JsonValue(bool b) : v_(b) {}
  JsonValue(int i) : v_(static_cast<std::int64_t>(i)) {}
  JsonValue(long i) : v_(static_cast<std::int64_t>(i)) {}
  JsonValue(long long i) : v_(static_cast<std::int64_t>(i)) {}
  JsonValue(unsigned i) : v_(static_cast<std::int64_t>(i)) {}
  JsonValue(unsigned long i) : v_(static_cast<std::int64_t>(i)) {}
  JsonValue(unsigned long long i) : v_(static_cast<std::int64_t>(i)) {}
  JsonValue(double d) : v_(d) {}
  JsonValue(const char* s) : v_(std::string(s)) {}
  JsonValue(std::string s) : v_(std::move(s)) {}
  JsonValue(Array a) : v_(std::move(a)) {}
  JsonValue(Object o) : v_(std::move(o)) {}

  static JsonValue array() { return JsonValue(Array{}); }
  static JsonValue object() { return JsonValue(Object{}); }

  bool is_array() const { return std::holds_alternative<Array>(v_); }
  bool is_object() const { return std::holds_alternative<Object>(v_); }
  bool is_null() const { return std::holds_alternative<std::nullptr_t>(v_); }

  // array append; converts a null value into an empty array first
  JsonValue& append(JsonValue v);
  // object field set; converts a null value into an empty object first
  JsonValue& set(std::string key, JsonValue v);

  // indent < 0 emits compact single-line JSON
  std::string dump(int indent = -1) const;

 private:
  void write(std::string& out, int indent, int depth) const;
  std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Array, Object> v_;
};

// %.17g; non-finite values are emitted as the quoted tokens "inf"/"-inf"/"nan"
std::string format_json_double(double x);
std::string json_escape(const std::string& s);

}  // namespace qrhc
