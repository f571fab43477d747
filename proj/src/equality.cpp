#include "proxylang/equality.hpp"

#include <cmath>

namespace proxylang {
namespace {

// Follows target links through every live proxy.
Value resolve_through_all(const Interpreter& interp, const Value& v) {
  Value current = v;
  while (is_object(current)) {
    const HeapObject& h = interp.heap().at(as_object(current));
    if (!h.is_proxy() || h.proxy().revoked) break;
    current = h.proxy().target;
  }
  return current;
}

bool primitive_loose_equals(const Value& a, const Value& b) {
  if (a.index() == b.index()) return raw_identical(a, b);
  const bool a_nullish = is_null(a) || is_undefined(a);
  const bool b_nullish = is_null(b) || is_undefined(b);
  if (a_nullish || b_nullish) return a_nullish && b_nullish;
  if (is_bool(a)) return primitive_loose_equals(to_number(a), b);
  if (is_bool(b)) return primitive_loose_equals(a, to_number(b));
  // One number and one string remain.
  return to_number(a) == to_number(b);
}

}  // namespace

bool raw_identical(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  switch (a.index()) {
    case 0:
    case 1: return true;
    case 2: return std::get<bool>(a) == std::get<bool>(b);
    case 3: return std::get<double>(a) == std::get<double>(b);
    case 4: return std::get<std::string>(a) == std::get<std::string>(b);
    default: return as_object(a) == as_object(b);
  }
}

Value resolve_for_mode(Interpreter& interp, const Value& v, EqualityMode mode) {
  if (!is_object(v)) return v;
  switch (mode) {
    case EqualityMode::Opaque: return v;
    case EqualityMode::Transparent:
    case EqualityMode::Operators: return resolve_through_all(interp, v);
    case EqualityMode::Trap: return interp.get_equality_object(v);
  }
  return v;
}

bool strict_equals_resolved(const Value& a, const Value& b) { return raw_identical(a, b); }

bool loose_equals_resolved(const Value& a, const Value& b) {
  if (is_object(a) || is_object(b)) {
    // No object-to-primitive coercion: an object only equals an object.
    return is_object(a) && is_object(b) && as_object(a) == as_object(b);
  }
  return primitive_loose_equals(a, b);
}

bool strict_equals(Interpreter& interp, const Value& a, const Value& b) {
  return strict_equals_resolved(resolve_for_mode(interp, a, interp.mode()),
                                resolve_for_mode(interp, b, interp.mode()));
}

bool loose_equals(Interpreter& interp, const Value& a, const Value& b) {
  return loose_equals_resolved(resolve_for_mode(interp, a, interp.mode()),
                               resolve_for_mode(interp, b, interp.mode()));
}

bool opaque_strict_equals(const Value& a, const Value& b) { return strict_equals_resolved(a, b); }

bool opaque_loose_equals(const Value& a, const Value& b) { return loose_equals_resolved(a, b); }

bool builtin_is_identical(Interpreter& interp, const Value& a, const Value& b) {
  return strict_equals_resolved(resolve_for_mode(interp, a, EqualityMode::Transparent),
                                resolve_for_mode(interp, b, EqualityMode::Transparent));
}

bool builtin_is_equal(Interpreter& interp, const Value& a, const Value& b) {
  return loose_equals_resolved(resolve_for_mode(interp, a, EqualityMode::Transparent),
                               resolve_for_mode(interp, b, EqualityMode::Transparent));
}

}  // namespace proxylang
