// Globals available to every script.

#include <fmt/format.h>

#include "proxylang/equality.hpp"
#include "proxylang/identity_map.hpp"
#include "proxylang/interpreter.hpp"

namespace proxylang {
namespace {

Value arg(std::span<const Value> args, std::size_t i) {
  return i < args.size() ? args[i] : Value{Undefined{}};
}

ObjectRef object_arg(std::span<const Value> args, std::size_t i, std::string_view who) {
  Value v = arg(args, i);
  if (!is_object(v)) {
    throw_error(ErrorKind::TypeError,
                fmt::format("{} expects an object, got {}", who, value_kind(v)));
  }
  return as_object(v);
}

std::string function_name(const Interpreter& interp, const Value& v) {
  if (!is_object(v)) return "";
  const HeapObject* h = &interp.heap().at(as_object(v));
  while (h->is_proxy()) h = &interp.heap().at(h->proxy().target);
  const auto& callable = h->ordinary().callable;
  if (auto* fn = std::get_if<ScriptFunction>(&callable)) return fn->code->name;
  if (auto* native = std::get_if<NativeFunction>(&callable)) return native->name;
  return "";
}

}  // namespace

void Interpreter::bind_builtins() {
  auto native = [this](std::string name, NativeFn fn) {
    return Value{alloc_native(std::move(name), std::move(fn))};
  };

  define_global("print", native("print", [](Interpreter& in, const Value&,
                                            std::span<const Value> args) -> Value {
    std::string line;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) line += ' ';
      line += render(args[i]);
    }
    in.print_line(line);
    return Undefined{};
  }));

  define_global("typeofValue", native("typeofValue", [](Interpreter& in, const Value&,
                                                        std::span<const Value> args) -> Value {
    return typeof_value(in, arg(args, 0));
  }));

  define_global("contractViolation",
                native("contractViolation",
                       [](Interpreter&, const Value&, std::span<const Value> args) -> Value {
                         throw_error(ErrorKind::ContractViolation, render(arg(args, 0)));
                       }));

  define_global("functionName", native("functionName", [](Interpreter& in, const Value&,
                                                          std::span<const Value> args) -> Value {
    return function_name(in, arg(args, 0));
  }));

  // Proxy: constructor plus static helpers.
  ObjectRef proxy_ctor = alloc_native(
      "Proxy",
      [](Interpreter&, const Value&, std::span<const Value>) -> Value {
        throw_error(ErrorKind::TypeError, "Proxy must be called with new");
      },
      [](Interpreter& in, const Value&, std::span<const Value> args) -> Value {
        return in.proxy_create(arg(args, 0), arg(args, 1));
      });
  auto& proxy_props = heap_.at(proxy_ctor).ordinary().properties;
  proxy_props.set("isEqual", native("isEqual", [](Interpreter& in, const Value&,
                                                  std::span<const Value> args) -> Value {
    return builtin_is_equal(in, arg(args, 0), arg(args, 1));
  }));
  proxy_props.set("isIdentical", native("isIdentical", [](Interpreter& in, const Value&,
                                                          std::span<const Value> args) -> Value {
    return builtin_is_identical(in, arg(args, 0), arg(args, 1));
  }));
  proxy_props.set("revoke", native("revoke", [](Interpreter& in, const Value&,
                                                std::span<const Value> args) -> Value {
    in.revoke(arg(args, 0));
    return Undefined{};
  }));
  proxy_props.set("withTransparency",
                  native("withTransparency",
                         [](Interpreter& in, const Value&, std::span<const Value> args) -> Value {
                           return in.with_transparency(arg(args, 0), truthy(arg(args, 1)),
                                                       arg(args, 2));
                         }));
  define_global("Proxy", proxy_ctor);

  auto make_weakmap = [](Interpreter& in, const Value&, std::span<const Value>) -> Value {
    return idmap_create(in);
  };
  define_global("WeakMap", alloc_native("WeakMap", make_weakmap, make_weakmap));

  // Reflect: the default behaviour of each trap, for handlers that forward.
  ObjectRef reflect = alloc_object();
  auto& reflect_props = heap_.at(reflect).ordinary().properties;
  reflect_props.set("get", native("get", [](Interpreter& in, const Value&,
                                            std::span<const Value> args) -> Value {
    ObjectRef target = object_arg(args, 0, "Reflect.get");
    return in.internal_get(target, to_property_key(arg(args, 1)), target);
  }));
  reflect_props.set("set", native("set", [](Interpreter& in, const Value&,
                                            std::span<const Value> args) -> Value {
    ObjectRef target = object_arg(args, 0, "Reflect.set");
    in.internal_set(target, to_property_key(arg(args, 1)), arg(args, 2), target);
    return true;
  }));
  reflect_props.set("has", native("has", [](Interpreter& in, const Value&,
                                            std::span<const Value> args) -> Value {
    return in.internal_has(object_arg(args, 0, "Reflect.has"), to_property_key(arg(args, 1)));
  }));
  reflect_props.set("deleteProperty",
                    native("deleteProperty",
                           [](Interpreter& in, const Value&, std::span<const Value> args) -> Value {
                             return in.internal_delete(object_arg(args, 0, "Reflect.deleteProperty"),
                                                       to_property_key(arg(args, 1)));
                           }));
  reflect_props.set("ownKeys", native("ownKeys", [](Interpreter& in, const Value&,
                                                    std::span<const Value> args) -> Value {
    std::vector<Value> keys;
    for (auto& k : in.internal_own_keys(object_arg(args, 0, "Reflect.ownKeys"))) {
      keys.emplace_back(std::move(k));
    }
    return in.alloc_array(keys);
  }));
  reflect_props.set("apply", native("apply", [](Interpreter& in, const Value&,
                                                std::span<const Value> args) -> Value {
    std::vector<Value> call_args;
    if (!is_undefined(arg(args, 2))) call_args = in.array_elements(arg(args, 2));
    return in.call(arg(args, 0), arg(args, 1), call_args);
  }));
  define_global("Reflect", reflect);
}

}  // namespace proxylang
