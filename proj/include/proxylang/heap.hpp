#pragma once

#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "proxylang/ast.hpp"
#include "proxylang/value.hpp"

namespace proxylang {

class Interpreter;

using NativeFn = std::function<Value(Interpreter&, const Value& this_value,
                                     std::span<const Value> args)>;

/// Lexical scope. Function scopes additionally carry the `this` binding.
struct Environment {
  std::unordered_map<std::string, Value> bindings;
  std::shared_ptr<Environment> parent;
  std::optional<Value> this_value;

  Value* find(std::string_view name);
  const Value* this_binding() const;
};

using EnvPtr = std::shared_ptr<Environment>;

struct ScriptFunction {
  std::shared_ptr<const ast::FunctionData> code;
  EnvPtr env;
};

struct NativeFunction {
  std::string name;
  NativeFn call;
  // Invoked for `new`; empty means the native is not a constructor.
  NativeFn construct;
};

/// String-keyed properties in insertion order.
class PropertyTable {
 public:
  const Value* find(std::string_view key) const;
  void set(std::string_view key, Value value);
  bool erase(std::string_view key);
  bool contains(std::string_view key) const { return find(key) != nullptr; }
  std::vector<std::string> keys() const;
  std::size_t size() const { return slots_.size(); }

 private:
  std::vector<std::pair<std::string, Value>> slots_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Entries of one identity map, keyed by the heap index of the resolved key.
struct IdentityMapData {
  std::unordered_map<std::uint32_t, Value> entries;
};

struct OrdinaryObject {
  PropertyTable properties;
  std::variant<std::monostate, ScriptFunction, NativeFunction> callable;
  std::shared_ptr<IdentityMapData> identity_map;

  bool is_callable() const {
    return !std::holds_alternative<std::monostate>(callable);
  }
};

/// target and handler never change after construction; revoked only ever
/// goes from false to true.
struct ProxySlots {
  ObjectRef target;
  ObjectRef handler;
  bool revoked = false;
};

struct HeapObject {
  std::variant<OrdinaryObject, ProxySlots> data;

  bool is_proxy() const { return std::holds_alternative<ProxySlots>(data); }
  OrdinaryObject& ordinary() { return std::get<OrdinaryObject>(data); }
  const OrdinaryObject& ordinary() const { return std::get<OrdinaryObject>(data); }
  ProxySlots& proxy() { return std::get<ProxySlots>(data); }
  const ProxySlots& proxy() const { return std::get<ProxySlots>(data); }
};

/// Append-only object store. Slots are never freed or moved, so references
/// returned by at() stay valid across later allocations.
class Heap {
 public:
  ObjectRef allocate(HeapObject object);
  HeapObject& at(ObjectRef ref) { return objects_.at(ref.index); }
  const HeapObject& at(ObjectRef ref) const { return objects_.at(ref.index); }
  std::size_t size() const { return objects_.size(); }

 private:
  std::deque<HeapObject> objects_;
};

}  // namespace proxylang
