#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "proxylang/ast.hpp"
#include "proxylang/errors.hpp"
#include "proxylang/heap.hpp"
#include "proxylang/value.hpp"

namespace proxylang {

/// Which equality design `==` and `===` follow. Fixed per interpreter.
enum class EqualityMode {
  Opaque,       // raw reference identity
  Transparent,  // resolve through every live proxy
  Operators,    // Transparent, plus :==: / :===: as the opaque forms
  Trap,         // resolve through get_equality_object (isTransparent trap)
};

std::string_view to_string(EqualityMode mode);
std::optional<EqualityMode> parse_equality_mode(std::string_view name);

/// How is_transparent treats handler isTransparent traps. Anything other
/// than Honor exists to compare modes over an unchanged script.
enum class TrapPolicy {
  Honor,
  IgnoreTraps,     // behave as if no handler defined isTransparent
  AllTransparent,  // behave as if every handler's trap returned true
};

std::string_view to_string(TrapPolicy policy);
std::optional<TrapPolicy> parse_trap_policy(std::string_view name);

struct InterpreterOptions {
  EqualityMode mode = EqualityMode::Opaque;
  TrapPolicy trap_policy = TrapPolicy::Honor;
  bool load_prelude = true;
  // Prelude text to load instead of the embedded copy.
  std::optional<std::string> prelude_source;
};

struct ExecutionResult {
  std::optional<ScriptError> error;
  // Text printed during this execution.
  std::string output;

  bool ok() const { return !error.has_value(); }
};

inline constexpr int kMaxCallDepth = 1024;

/// Trap names understood by trap_dispatch.
enum class Trap { Get, Set, Has, DeleteProperty, OwnKeys, Apply };
std::string_view to_string(Trap trap);
std::optional<Trap> parse_trap(std::string_view name);

/// One script execution context: heap, globals, equality mode, transparency
/// override stack and call depth. Not thread-safe; separate instances share
/// nothing and may run on separate threads.
class Interpreter {
 public:
  explicit Interpreter(InterpreterOptions options = {});
  Interpreter(const Interpreter&) = delete;
  Interpreter& operator=(const Interpreter&) = delete;

  EqualityMode mode() const { return options_.mode; }
  TrapPolicy trap_policy() const { return options_.trap_policy; }

  // ---- evaluation -------------------------------------------------------

  /// Parses and runs source in the global scope. Lex and parse errors are
  /// reported through the result like runtime errors.
  ExecutionResult run(std::string_view source);
  ExecutionResult evaluate_program(const ast::Program& program);

  /// Runs a program in the global scope and returns the value of its last
  /// statement when that statement is an expression. Throws ScriptError.
  std::optional<Value> evaluate_repl(const ast::Program& program);

  /// Everything printed since construction.
  const std::string& output() const { return output_; }
  void print_line(std::string_view text);

  void define_global(const std::string& name, Value value);
  std::optional<Value> global(std::string_view name) const;

  /// Calls any callable value. TypeError for non-callables.
  Value call(const Value& fn, const Value& this_value, std::span<const Value> args);
  /// `new ctor(args)`.
  Value construct(const Value& ctor, std::span<const Value> args);

  int call_depth() const { return depth_; }

  // ---- object engine ----------------------------------------------------

  Heap& heap() { return heap_; }
  const Heap& heap() const { return heap_; }

  ObjectRef alloc_object(std::vector<std::pair<std::string, Value>> properties = {});
  ObjectRef alloc_native(std::string name, NativeFn call, NativeFn construct = {});
  /// Array-like object: keys "0".."n-1" plus "length".
  ObjectRef alloc_array(std::span<const Value> elements);
  /// Reads an array-like through the ordinary get path (traps included).
  std::vector<Value> array_elements(const Value& array_like);

  Value internal_get(ObjectRef obj, std::string_view key, const Value& receiver);
  void internal_set(ObjectRef obj, std::string_view key, Value value, const Value& receiver);
  bool internal_has(ObjectRef obj, std::string_view key);
  bool internal_delete(ObjectRef obj, std::string_view key);
  std::vector<std::string> internal_own_keys(ObjectRef obj);
  Value internal_call(ObjectRef obj, const Value& this_value, std::span<const Value> args);

  bool is_proxy(ObjectRef obj) const { return heap_.at(obj).is_proxy(); }
  /// Ordinary objects with a function record; proxies whose target is callable.
  bool is_callable(ObjectRef obj) const;

  // ---- proxy engine -----------------------------------------------------

  ObjectRef proxy_create(const Value& target, const Value& handler);

  /// Invokes handler[trap](target, ...args, proxy) when the handler defines
  /// the trap, and otherwise applies the matching internal method to the
  /// target. Argument lists: get (key), set (key, value), has (key),
  /// deleteProperty (key), ownKeys (), apply (this, argsArray).
  Value trap_dispatch(ObjectRef proxy, Trap trap, std::span<const Value> args);

  void revoke(const Value& proxy);
  bool is_transparent(ObjectRef proxy);
  Value get_equality_object(const Value& v);

  /// Runs thunk with is_transparent(proxy) pinned to flag; the pin is removed
  /// on every exit path.
  Value with_transparency(const Value& proxy, bool flag, const Value& thunk);
  std::size_t override_depth() const { return overrides_.size(); }

 private:
  friend class CallFrame;
  friend class Evaluator;

  struct Override {
    ObjectRef proxy;
    bool flag;
  };

  void bind_builtins();
  void load_prelude();
  Value call_script(const ScriptFunction& fn, const Value& this_value,
                    std::span<const Value> args);
  ProxySlots& live_proxy(ObjectRef proxy);
  void enter_frame();
  void leave_frame() { --depth_; }

  InterpreterOptions options_;
  Heap heap_;
  EnvPtr globals_;
  std::vector<Override> overrides_;
  int depth_ = 0;
  // True while executing prelude code.
  bool library_frame_ = false;
  std::string output_;
};

/// Bumps the interpreter's call depth for its lifetime; StackOverflow past
/// kMaxCallDepth.
class CallFrame {
 public:
  explicit CallFrame(Interpreter& interp) : interp_(interp) { interp_.enter_frame(); }
  ~CallFrame() { interp_.leave_frame(); }
  CallFrame(const CallFrame&) = delete;
  CallFrame& operator=(const CallFrame&) = delete;

 private:
  Interpreter& interp_;
};

/// Kind string for typeofValue: value_kind, with "function" for callables.
std::string typeof_value(const Interpreter& interp, const Value& v);

}  // namespace proxylang
