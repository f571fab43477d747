// Internal methods of heap objects. Ordinary objects operate on their
// property table or function record directly; proxies go through
// trap_dispatch.

#include <cmath>

#include <fmt/format.h>

#include "proxylang/interpreter.hpp"

namespace proxylang {

ObjectRef Interpreter::alloc_object(std::vector<std::pair<std::string, Value>> properties) {
  OrdinaryObject obj;
  for (auto& [key, value] : properties) obj.properties.set(key, std::move(value));
  return heap_.allocate(HeapObject{std::move(obj)});
}

ObjectRef Interpreter::alloc_native(std::string name, NativeFn call, NativeFn construct) {
  OrdinaryObject obj;
  obj.callable = NativeFunction{std::move(name), std::move(call), std::move(construct)};
  return heap_.allocate(HeapObject{std::move(obj)});
}

ObjectRef Interpreter::alloc_array(std::span<const Value> elements) {
  OrdinaryObject obj;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    obj.properties.set(std::to_string(i), elements[i]);
  }
  obj.properties.set("length", static_cast<double>(elements.size()));
  return heap_.allocate(HeapObject{std::move(obj)});
}

std::vector<Value> Interpreter::array_elements(const Value& array_like) {
  if (!is_object(array_like)) {
    throw_error(ErrorKind::TypeError,
                fmt::format("expected an array-like object, got {}", value_kind(array_like)));
  }
  ObjectRef ref = as_object(array_like);
  double length = to_number(internal_get(ref, "length", array_like));
  if (!(length >= 0) || std::isinf(length)) length = 0;
  std::vector<Value> out;
  for (std::size_t i = 0; i < static_cast<std::size_t>(length); ++i) {
    out.push_back(internal_get(ref, std::to_string(i), array_like));
  }
  return out;
}

Value Interpreter::internal_get(ObjectRef obj, std::string_view key, const Value& receiver) {
  HeapObject& h = heap_.at(obj);
  if (h.is_proxy()) {
    Value args[] = {std::string(key)};
    return trap_dispatch(obj, Trap::Get, args);
  }
  (void)receiver;
  const Value* v = h.ordinary().properties.find(key);
  return v ? *v : Value{Undefined{}};
}

void Interpreter::internal_set(ObjectRef obj, std::string_view key, Value value,
                               const Value& receiver) {
  HeapObject& h = heap_.at(obj);
  if (h.is_proxy()) {
    Value args[] = {std::string(key), std::move(value)};
    trap_dispatch(obj, Trap::Set, args);
    return;
  }
  (void)receiver;
  h.ordinary().properties.set(key, std::move(value));
}

bool Interpreter::internal_has(ObjectRef obj, std::string_view key) {
  HeapObject& h = heap_.at(obj);
  if (h.is_proxy()) {
    Value args[] = {std::string(key)};
    return truthy(trap_dispatch(obj, Trap::Has, args));
  }
  return h.ordinary().properties.contains(key);
}

bool Interpreter::internal_delete(ObjectRef obj, std::string_view key) {
  HeapObject& h = heap_.at(obj);
  if (h.is_proxy()) {
    Value args[] = {std::string(key)};
    return truthy(trap_dispatch(obj, Trap::DeleteProperty, args));
  }
  return h.ordinary().properties.erase(key);
}

std::vector<std::string> Interpreter::internal_own_keys(ObjectRef obj) {
  HeapObject& h = heap_.at(obj);
  if (!h.is_proxy()) return h.ordinary().properties.keys();
  Value result = trap_dispatch(obj, Trap::OwnKeys, {});
  std::vector<std::string> keys;
  for (const Value& v : array_elements(result)) keys.push_back(to_property_key(v));
  return keys;
}

Value Interpreter::internal_call(ObjectRef obj, const Value& this_value,
                                 std::span<const Value> args) {
  HeapObject& h = heap_.at(obj);
  if (h.is_proxy()) {
    Value trap_args[] = {this_value, Value{alloc_array(args)}};
    return trap_dispatch(obj, Trap::Apply, trap_args);
  }
  OrdinaryObject& o = h.ordinary();
  if (auto* fn = std::get_if<ScriptFunction>(&o.callable)) {
    ScriptFunction copy = *fn;
    return call_script(copy, this_value, args);
  }
  if (auto* native = std::get_if<NativeFunction>(&o.callable)) {
    NativeFn fn = native->call;
    // Natives can re-enter the interpreter (traps, thunks), so they count too.
    CallFrame frame(*this);
    return fn(*this, this_value, args);
  }
  throw_error(ErrorKind::TypeError, "object is not a function");
}

bool Interpreter::is_callable(ObjectRef obj) const {
  const HeapObject* h = &heap_.at(obj);
  while (h->is_proxy()) h = &heap_.at(h->proxy().target);
  return h->ordinary().is_callable();
}

Value Interpreter::call(const Value& fn, const Value& this_value, std::span<const Value> args) {
  if (!is_object(fn) || !is_callable(as_object(fn))) {
    throw_error(ErrorKind::TypeError, fmt::format("{} is not a function", value_kind(fn)));
  }
  return internal_call(as_object(fn), this_value, args);
}

Value Interpreter::construct(const Value& ctor, std::span<const Value> args) {
  if (is_object(ctor) && !is_proxy(as_object(ctor))) {
    OrdinaryObject& o = heap_.at(as_object(ctor)).ordinary();
    if (auto* native = std::get_if<NativeFunction>(&o.callable); native && native->construct) {
      NativeFn fn = native->construct;
      CallFrame frame(*this);
      return fn(*this, Undefined{}, args);
    }
    if (auto* script = std::get_if<ScriptFunction>(&o.callable)) {
      ScriptFunction copy = *script;
      Value instance = alloc_object();
      Value result = call_script(copy, instance, args);
      return is_object(result) ? result : instance;
    }
  }
  throw_error(ErrorKind::TypeError, fmt::format("{} is not a constructor", value_kind(ctor)));
}

void Interpreter::enter_frame() {
  if (depth_ >= kMaxCallDepth) {
    throw_error(ErrorKind::StackOverflow,
                fmt::format("maximum call depth of {} exceeded", kMaxCallDepth));
  }
  ++depth_;
}

std::string typeof_value(const Interpreter& interp, const Value& v) {
  if (is_object(v) && interp.is_callable(as_object(v))) return "function";
  return std::string(value_kind(v));
}

}  // namespace proxylang
