#pragma once

#include "proxylang/interpreter.hpp"

namespace proxylang {

/// Script-visible WeakMap: an object with set/get/has/delete methods whose
/// keys are compared by their identity representative under the
/// interpreter's equality mode, re-resolved on every operation. Entries are
/// held strongly.
ObjectRef idmap_create(Interpreter& interp);

void idmap_set(Interpreter& interp, ObjectRef map, const Value& key, Value value);
Value idmap_get(Interpreter& interp, ObjectRef map, const Value& key);
bool idmap_has(Interpreter& interp, ObjectRef map, const Value& key);
bool idmap_delete(Interpreter& interp, ObjectRef map, const Value& key);

}  // namespace proxylang
