#include <fmt/format.h>

#include "proxylang/interpreter.hpp"

namespace proxylang {

std::string_view to_string(Trap trap) {
  switch (trap) {
    case Trap::Get: return "get";
    case Trap::Set: return "set";
    case Trap::Has: return "has";
    case Trap::DeleteProperty: return "deleteProperty";
    case Trap::OwnKeys: return "ownKeys";
    case Trap::Apply: return "apply";
  }
  return "?";
}

std::optional<Trap> parse_trap(std::string_view name) {
  for (Trap t : {Trap::Get, Trap::Set, Trap::Has, Trap::DeleteProperty, Trap::OwnKeys,
                 Trap::Apply}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

ObjectRef Interpreter::proxy_create(const Value& target, const Value& handler) {
  if (!is_object(target)) {
    throw_error(ErrorKind::TypeError,
                fmt::format("proxy target must be an object, got {}", value_kind(target)));
  }
  if (!is_object(handler)) {
    throw_error(ErrorKind::TypeError,
                fmt::format("proxy handler must be an object, got {}", value_kind(handler)));
  }
  return heap_.allocate(HeapObject{ProxySlots{as_object(target), as_object(handler), false}});
}

ProxySlots& Interpreter::live_proxy(ObjectRef proxy) {
  ProxySlots& slots = heap_.at(proxy).proxy();
  if (slots.revoked) {
    throw_error(ErrorKind::RevokedProxyError, "operation on a revoked proxy");
  }
  return slots;
}

Value Interpreter::trap_dispatch(ObjectRef proxy, Trap trap, std::span<const Value> args) {
  // Each proxy level counts as a frame so long forwarding chains end in
  // StackOverflow instead of exhausting the native stack.
  CallFrame frame(*this);
  const ProxySlots slots = live_proxy(proxy);
  const std::string_view name = to_string(trap);

  Value trap_fn = internal_get(slots.handler, name, Value{slots.handler});
  if (!is_undefined(trap_fn) && !is_null(trap_fn)) {
    if (!is_object(trap_fn) || !is_callable(as_object(trap_fn))) {
      throw_error(ErrorKind::TypeError, fmt::format("proxy trap '{}' is not a function", name));
    }
    std::vector<Value> trap_args;
    trap_args.reserve(args.size() + 2);
    trap_args.emplace_back(slots.target);
    trap_args.insert(trap_args.end(), args.begin(), args.end());
    trap_args.emplace_back(proxy);
    return call(trap_fn, Value{slots.handler}, trap_args);
  }

  auto key = [&] { return to_property_key(args[0]); };
  switch (trap) {
    case Trap::Get:
      return internal_get(slots.target, key(), Value{proxy});
    case Trap::Set:
      internal_set(slots.target, key(), args[1], Value{proxy});
      return true;
    case Trap::Has:
      return internal_has(slots.target, key());
    case Trap::DeleteProperty:
      return internal_delete(slots.target, key());
    case Trap::OwnKeys: {
      std::vector<Value> keys;
      for (auto& k : internal_own_keys(slots.target)) keys.emplace_back(std::move(k));
      return Value{alloc_array(keys)};
    }
    case Trap::Apply: {
      std::vector<Value> call_args = array_elements(args[1]);
      if (!is_callable(slots.target)) {
        throw_error(ErrorKind::TypeError, "proxy target is not a function");
      }
      return internal_call(slots.target, args[0], call_args);
    }
  }
  return Undefined{};
}

void Interpreter::revoke(const Value& proxy) {
  if (!is_object(proxy) || !is_proxy(as_object(proxy))) {
    throw_error(ErrorKind::TypeError, "only proxies can be revoked");
  }
  heap_.at(as_object(proxy)).proxy().revoked = true;
}

bool Interpreter::is_transparent(ObjectRef proxy) {
  for (auto it = overrides_.rbegin(); it != overrides_.rend(); ++it) {
    if (it->proxy == proxy) return it->flag;
  }
  const ProxySlots slots = heap_.at(proxy).proxy();
  if (slots.revoked) return false;
  switch (options_.trap_policy) {
    case TrapPolicy::IgnoreTraps: return false;
    case TrapPolicy::AllTransparent: return true;
    case TrapPolicy::Honor: break;
  }
  Value trap = internal_get(slots.handler, "isTransparent", Value{slots.handler});
  if (!is_object(trap) || !is_callable(as_object(trap))) return false;
  Value args[] = {Value{slots.target}, Value{proxy}};
  return truthy(call(trap, Value{slots.handler}, args));
}

Value Interpreter::get_equality_object(const Value& v) {
  Value current = v;
  while (is_object(current) && is_proxy(as_object(current))) {
    ObjectRef proxy = as_object(current);
    if (!is_transparent(proxy)) return current;
    current = heap_.at(proxy).proxy().target;
  }
  return current;
}

Value Interpreter::with_transparency(const Value& proxy, bool flag, const Value& thunk) {
  if (!is_object(proxy) || !is_proxy(as_object(proxy))) {
    throw_error(ErrorKind::TypeError, "withTransparency expects a proxy");
  }
  if (!is_object(thunk) || !is_callable(as_object(thunk))) {
    throw_error(ErrorKind::TypeError, "withTransparency expects a function");
  }
  struct Pop {
    std::vector<Override>& stack;
    ~Pop() { stack.pop_back(); }
  };
  overrides_.push_back({as_object(proxy), flag});
  Pop pop{overrides_};
  return call(thunk, Undefined{}, {});
}

}  // namespace proxylang
