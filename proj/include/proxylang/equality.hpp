#pragma once

#include "proxylang/interpreter.hpp"
#include "proxylang/value.hpp"

namespace proxylang {

/// Heap-index identity on refs; same-type primitive equality otherwise
/// (NaN differs from itself).
bool raw_identical(const Value& a, const Value& b);

/// Identity representative of v under mode. Transparent and Operators follow
/// target links through every proxy, stopping at revoked ones; Trap defers to
/// get_equality_object.
Value resolve_for_mode(Interpreter& interp, const Value& v, EqualityMode mode);

/// `===` / `==` under the interpreter's mode.
bool strict_equals(Interpreter& interp, const Value& a, const Value& b);
bool loose_equals(Interpreter& interp, const Value& a, const Value& b);

/// `:===:` / `:==:`: opaque resolution in every mode.
bool opaque_strict_equals(const Value& a, const Value& b);
bool opaque_loose_equals(const Value& a, const Value& b);

/// Proxy.isIdentical / Proxy.isEqual: full transparency in every mode.
bool builtin_is_identical(Interpreter& interp, const Value& a, const Value& b);
bool builtin_is_equal(Interpreter& interp, const Value& a, const Value& b);

/// Comparison of already-resolved values.
bool strict_equals_resolved(const Value& a, const Value& b);
bool loose_equals_resolved(const Value& a, const Value& b);

}  // namespace proxylang
