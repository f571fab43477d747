#include "proxylang/identity_map.hpp"

#include <fmt/format.h>

#include "proxylang/equality.hpp"

namespace proxylang {
namespace {

IdentityMapData& data_of(Interpreter& interp, ObjectRef map) {
  HeapObject& h = interp.heap().at(map);
  if (h.is_proxy() || !h.ordinary().identity_map) {
    throw_error(ErrorKind::TypeError, "receiver is not a WeakMap");
  }
  return *h.ordinary().identity_map;
}

std::uint32_t resolved_key(Interpreter& interp, const Value& key) {
  if (!is_object(key)) {
    throw_error(ErrorKind::TypeError,
                fmt::format("WeakMap keys must be objects, got {}", value_kind(key)));
  }
  return as_object(resolve_for_mode(interp, key, interp.mode())).index;
}

Value arg(std::span<const Value> args, std::size_t i) {
  return i < args.size() ? args[i] : Value{Undefined{}};
}

}  // namespace

ObjectRef idmap_create(Interpreter& interp) {
  ObjectRef map = interp.alloc_object();
  interp.heap().at(map).ordinary().identity_map = std::make_shared<IdentityMapData>();

  auto method = [&](const char* name, NativeFn fn) {
    interp.heap().at(map).ordinary().properties.set(
        name, interp.alloc_native(name, std::move(fn)));
  };
  method("set", [map](Interpreter& in, const Value&, std::span<const Value> args) -> Value {
    idmap_set(in, map, arg(args, 0), arg(args, 1));
    return map;
  });
  method("get", [map](Interpreter& in, const Value&, std::span<const Value> args) -> Value {
    return idmap_get(in, map, arg(args, 0));
  });
  method("has", [map](Interpreter& in, const Value&, std::span<const Value> args) -> Value {
    return idmap_has(in, map, arg(args, 0));
  });
  method("delete", [map](Interpreter& in, const Value&, std::span<const Value> args) -> Value {
    return idmap_delete(in, map, arg(args, 0));
  });
  return map;
}

void idmap_set(Interpreter& interp, ObjectRef map, const Value& key, Value value) {
  std::uint32_t k = resolved_key(interp, key);
  data_of(interp, map).entries[k] = std::move(value);
}

Value idmap_get(Interpreter& interp, ObjectRef map, const Value& key) {
  std::uint32_t k = resolved_key(interp, key);
  auto& entries = data_of(interp, map).entries;
  auto it = entries.find(k);
  return it == entries.end() ? Value{Undefined{}} : it->second;
}

bool idmap_has(Interpreter& interp, ObjectRef map, const Value& key) {
  std::uint32_t k = resolved_key(interp, key);
  return data_of(interp, map).entries.contains(k);
}

bool idmap_delete(Interpreter& interp, ObjectRef map, const Value& key) {
  std::uint32_t k = resolved_key(interp, key);
  return data_of(interp, map).entries.erase(k) > 0;
}

}  // namespace proxylang
