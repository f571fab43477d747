#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace proxylang {

struct Undefined {
  bool operator==(const Undefined&) const = default;
};

struct Null {
  bool operator==(const Null&) const = default;
};

/// Handle to a heap slot. Two refs are raw-identical iff their indices match.
struct ObjectRef {
  std::uint32_t index = 0;

  auto operator<=>(const ObjectRef&) const = default;
};

using Value = std::variant<Undefined, Null, bool, double, std::string, ObjectRef>;

inline bool is_undefined(const Value& v) { return std::holds_alternative<Undefined>(v); }
inline bool is_null(const Value& v) { return std::holds_alternative<Null>(v); }
inline bool is_bool(const Value& v) { return std::holds_alternative<bool>(v); }
inline bool is_number(const Value& v) { return std::holds_alternative<double>(v); }
inline bool is_string(const Value& v) { return std::holds_alternative<std::string>(v); }
inline bool is_object(const Value& v) { return std::holds_alternative<ObjectRef>(v); }

inline ObjectRef as_object(const Value& v) { return std::get<ObjectRef>(v); }

/// "undefined", "null", "boolean", "number", "string" or "object".
std::string_view value_kind(const Value& v);

/// Shortest decimal that round-trips, with the usual script spellings for
/// NaN and the infinities. Negative zero renders as "0".
std::string render_number(double d);

/// Text produced by `print`. Objects render as "[object]" whatever they are.
std::string render(const Value& v);

/// String conversion for primitives used by `+` and by property keys.
std::string to_property_key(const Value& v);

/// Numeric conversion of a primitive: booleans to 0/1, null to 0, undefined
/// to NaN, strings via string_to_number. Objects yield NaN.
double to_number(const Value& v);

/// Numeric value of a string as the script language reads it: surrounding
/// whitespace is ignored, the empty string is 0, decimal, 0x/0o/0b and
/// [+-]Infinity literals are accepted, anything else is NaN.
double string_to_number(std::string_view text);

bool truthy(const Value& v);

}  // namespace proxylang
