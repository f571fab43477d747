#include "proxylang/interpreter.hpp"

#include "proxylang/evaluator.hpp"
#include "proxylang/parser.hpp"
#include "proxylang/prelude.hpp"

namespace proxylang {

std::string_view to_string(EqualityMode mode) {
  switch (mode) {
    case EqualityMode::Opaque: return "opaque";
    case EqualityMode::Transparent: return "transparent";
    case EqualityMode::Operators: return "operators";
    case EqualityMode::Trap: return "trap";
  }
  return "?";
}

std::optional<EqualityMode> parse_equality_mode(std::string_view name) {
  for (auto m : {EqualityMode::Opaque, EqualityMode::Transparent, EqualityMode::Operators,
                 EqualityMode::Trap}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view to_string(TrapPolicy policy) {
  switch (policy) {
    case TrapPolicy::Honor: return "honor";
    case TrapPolicy::IgnoreTraps: return "ignore";
    case TrapPolicy::AllTransparent: return "all-true";
  }
  return "?";
}

std::optional<TrapPolicy> parse_trap_policy(std::string_view name) {
  for (auto p : {TrapPolicy::Honor, TrapPolicy::IgnoreTraps, TrapPolicy::AllTransparent}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

Interpreter::Interpreter(InterpreterOptions options)
    : options_(std::move(options)), globals_(std::make_shared<Environment>()) {
  bind_builtins();
  if (options_.load_prelude) load_prelude();
}

void Interpreter::load_prelude() {
  std::string_view source =
      options_.prelude_source ? std::string_view(*options_.prelude_source) : embedded_prelude();
  ast::Program program = parse_source(source, ParseOptions{.library = true});
  library_frame_ = true;
  struct Reset {
    bool& flag;
    ~Reset() { flag = false; }
  } reset{library_frame_};
  Value ignored;
  Evaluator(*this).exec_list(program.statements, globals_, ignored);
}

ExecutionResult Interpreter::run(std::string_view source) {
  ast::Program program;
  try {
    program = parse_source(source);
  } catch (const ScriptError& err) {
    return ExecutionResult{err, {}};
  }
  return evaluate_program(program);
}

ExecutionResult Interpreter::evaluate_program(const ast::Program& program) {
  const std::size_t start = output_.size();
  ExecutionResult result;
  try {
    Value ignored;
    Evaluator(*this).exec_list(program.statements, globals_, ignored);
  } catch (const ScriptError& err) {
    result.error = err;
  }
  result.output = output_.substr(start);
  return result;
}

std::optional<Value> Interpreter::evaluate_repl(const ast::Program& program) {
  Evaluator ev(*this);
  ev.hoist(program.statements, globals_);
  std::optional<Value> last;
  for (const auto& s : program.statements) {
    if (auto* e = std::get_if<ast::ExprStmt>(&s->node)) {
      last = ev.eval(*e->expr, globals_);
    } else {
      Value ignored;
      ev.exec(*s, globals_, ignored);
      last.reset();
    }
  }
  return last;
}

void Interpreter::print_line(std::string_view text) {
  output_ += text;
  output_ += '\n';
}

void Interpreter::define_global(const std::string& name, Value value) {
  globals_->bindings[name] = std::move(value);
}

std::optional<Value> Interpreter::global(std::string_view name) const {
  auto it = globals_->bindings.find(std::string(name));
  if (it == globals_->bindings.end()) return std::nullopt;
  return it->second;
}

}  // namespace proxylang
