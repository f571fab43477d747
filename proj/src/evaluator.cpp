// Tree-walking evaluation of statements and expressions.

#include <cmath>

#include <fmt/format.h>

#include "proxylang/equality.hpp"
#include "proxylang/evaluator.hpp"

namespace proxylang {

using namespace ast;

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string describe(const Expr& e) {
  if (auto* id = std::get_if<Identifier>(&e.node)) return id->name;
  if (auto* get = std::get_if<PropertyGet>(&e.node)) {
    if (!get->computed) return describe(*get->object) + "." + get->name;
    return describe(*get->object) + "[...]";
  }
  if (std::holds_alternative<ThisExpr>(e.node)) return "this";
  return "expression";
}

double numeric_operand(const Value& v, BinaryOp op) {
  if (is_object(v)) {
    throw_error(ErrorKind::TypeError,
                fmt::format("operator '{}' cannot be applied to an object", to_string(op)));
  }
  return to_number(v);
}

}  // namespace

Evaluator::Evaluator(Interpreter& interp) : in_(interp) {}

void Evaluator::hoist(const std::vector<StmtPtr>& body, const EnvPtr& env) {
  for (const auto& s : body) {
    if (auto* decl = std::get_if<FunctionDecl>(&s->node)) {
      env->bindings[decl->fn->name] = make_closure(decl->fn, env);
    }
  }
}

Value Evaluator::make_closure(const std::shared_ptr<const FunctionData>& fn, const EnvPtr& env) {
  OrdinaryObject obj;
  obj.callable = ScriptFunction{fn, env};
  return in_.heap_.allocate(HeapObject{std::move(obj)});
}

Flow Evaluator::exec_list(const std::vector<StmtPtr>& body, const EnvPtr& env, Value& result) {
  hoist(body, env);
  for (const auto& s : body) {
    if (exec(*s, env, result) == Flow::Return) return Flow::Return;
  }
  return Flow::Normal;
}

Flow Evaluator::exec_scoped(const Block& block, const EnvPtr& parent, Value& result) {
  auto env = std::make_shared<Environment>();
  env->parent = parent;
  return exec_list(block.body, env, result);
}

void Evaluator::stamp(ScriptError& err, SourcePos pos) const {
  if (!err.pos() && !in_.library_frame_) err.set_pos(pos);
}

Flow Evaluator::exec(const Stmt& s, const EnvPtr& env, Value& result) {
  try {
    return exec_node(s, env, result);
  } catch (ScriptError& err) {
    stamp(err, s.pos);
    throw;
  }
}

Flow Evaluator::exec_node(const Stmt& s, const EnvPtr& env, Value& result) {
  return std::visit(
      Overloaded{
          [&](const VarDecl& v) {
            Value init = eval(*v.init, env);
            env->bindings[v.name] = std::move(init);
            return Flow::Normal;
          },
          [&](const Assign& a) {
            assign(a, env);
            return Flow::Normal;
          },
          [&](const ExprStmt& e) {
            eval(*e.expr, env);
            return Flow::Normal;
          },
          [&](const If& i) {
            if (truthy(eval(*i.test, env))) return exec_scoped(i.then_block, env, result);
            if (i.else_block) return exec_scoped(*i.else_block, env, result);
            return Flow::Normal;
          },
          [&](const While& w) {
            while (truthy(eval(*w.test, env))) {
              if (exec_scoped(w.body, env, result) == Flow::Return) return Flow::Return;
            }
            return Flow::Normal;
          },
          [&](const Return& r) {
            result = r.value ? eval(*r.value, env) : Value{Undefined{}};
            return Flow::Return;
          },
          [&](const Block& b) { return exec_scoped(b, env, result); },
          [&](const FunctionDecl&) { return Flow::Normal; },
      },
      s.node);
}

void Evaluator::assign(const Assign& a, const EnvPtr& env) {
  if (auto* id = std::get_if<Identifier>(&a.target->node)) {
    Value* slot = env->find(id->name);
    if (!slot) {
      throw ScriptError(ErrorKind::ReferenceError,
                        fmt::format("assignment to undeclared variable '{}'", id->name),
                        a.target->pos);
    }
    Value v = eval(*a.value, env);
    // The slot pointer may be stale if evaluation declared new bindings.
    *env->find(id->name) = std::move(v);
    return;
  }
  const auto& get = std::get<PropertyGet>(a.target->node);
  Value object = eval(*get.object, env);
  std::string key = get.computed ? to_property_key(eval(*get.computed, env)) : get.name;
  Value v = eval(*a.value, env);
  if (!is_object(object)) {
    throw ScriptError(ErrorKind::TypeError,
                      fmt::format("cannot set property '{}' of {}", key, value_kind(object)),
                      a.target->pos);
  }
  in_.internal_set(as_object(object), key, std::move(v), object);
}

Value Evaluator::eval(const Expr& e, const EnvPtr& env) {
  try {
    return eval_node(e, env);
  } catch (ScriptError& err) {
    stamp(err, e.pos);
    throw;
  }
}

Value Evaluator::read_property(const Value& object, const std::string& key) {
  if (is_object(object)) return in_.internal_get(as_object(object), key, object);
  if (is_undefined(object) || is_null(object)) {
    throw_error(ErrorKind::TypeError,
                fmt::format("cannot read property '{}' of {}", key, value_kind(object)));
  }
  if (is_string(object) && key == "length") {
    return static_cast<double>(std::get<std::string>(object).size());
  }
  return Undefined{};
}

std::vector<Value> Evaluator::eval_args(const std::vector<ExprPtr>& args, const EnvPtr& env) {
  std::vector<Value> out;
  out.reserve(args.size());
  for (const auto& a : args) out.push_back(eval(*a, env));
  return out;
}

Value Evaluator::invoke(const Value& fn, const Value& this_value, std::span<const Value> args,
                        const Expr& callee) {
  if (!is_object(fn) || !in_.is_callable(as_object(fn))) {
    throw_error(ErrorKind::TypeError, fmt::format("{} is not a function", describe(callee)));
  }
  return in_.internal_call(as_object(fn), this_value, args);
}

Value Evaluator::eval_node(const Expr& e, const EnvPtr& env) {
  return std::visit(
      Overloaded{
          [&](const NumberLit& n) -> Value { return n.value; },
          [&](const StringLit& s) -> Value { return s.value; },
          [&](const BoolLit& b) -> Value { return b.value; },
          [&](const NullLit&) -> Value { return Null{}; },
          [&](const UndefinedLit&) -> Value { return Undefined{}; },
          [&](const ThisExpr&) -> Value {
            const Value* self = env->this_binding();
            return self ? *self : Value{Undefined{}};
          },
          [&](const Identifier& id) -> Value {
            const Value* v = env->find(id.name);
            if (!v) {
              throw_error(ErrorKind::ReferenceError, fmt::format("'{}' is not defined", id.name));
            }
            return *v;
          },
          [&](const ObjectLit& o) -> Value {
            std::vector<std::pair<std::string, Value>> props;
            props.reserve(o.properties.size());
            for (const auto& [k, v] : o.properties) props.emplace_back(k, eval(*v, env));
            return in_.alloc_object(std::move(props));
          },
          [&](const FunctionExpr& f) -> Value { return make_closure(f.fn, env); },
          [&](const PropertyGet& g) -> Value {
            Value object = eval(*g.object, env);
            std::string key = g.computed ? to_property_key(eval(*g.computed, env)) : g.name;
            return read_property(object, key);
          },
          [&](const Call& c) -> Value {
            Value fn = eval(*c.callee, env);
            std::vector<Value> args = eval_args(c.args, env);
            return invoke(fn, Undefined{}, args, *c.callee);
          },
          [&](const MethodCall& m) -> Value {
            Value object = eval(*m.object, env);
            std::string key = m.computed ? to_property_key(eval(*m.computed, env)) : m.name;
            Value fn = read_property(object, key);
            std::vector<Value> args = eval_args(m.args, env);
            if (!is_object(fn) || !in_.is_callable(as_object(fn))) {
              throw_error(ErrorKind::TypeError,
                          fmt::format("{}.{} is not a function", describe(*m.object),
                                      m.computed ? "[...]" : key));
            }
            return in_.internal_call(as_object(fn), object, args);
          },
          [&](const New& n) -> Value {
            Value ctor = eval(*n.callee, env);
            std::vector<Value> args = eval_args(n.args, env);
            return in_.construct(ctor, args);
          },
          [&](const Binary& b) -> Value { return binary(b, env); },
          [&](const Unary& u) -> Value {
            Value v = eval(*u.operand, env);
            if (u.op == UnaryOp::Not) return !truthy(v);
            if (is_object(v)) throw_error(ErrorKind::TypeError, "cannot negate an object");
            return -to_number(v);
          },
          [&](const Conditional& c) -> Value {
            return truthy(eval(*c.test, env)) ? eval(*c.then_expr, env) : eval(*c.else_expr, env);
          },
      },
      e.node);
}

Value Evaluator::binary(const Binary& b, const EnvPtr& env) {
  if (b.op == BinaryOp::And || b.op == BinaryOp::Or) {
    Value lhs = eval(*b.lhs, env);
    if (truthy(lhs) == (b.op == BinaryOp::Or)) return lhs;
    return eval(*b.rhs, env);
  }
  Value lhs = eval(*b.lhs, env);
  Value rhs = eval(*b.rhs, env);
  switch (b.op) {
    case BinaryOp::LooseEq: return loose_equals(in_, lhs, rhs);
    case BinaryOp::LooseNe: return !loose_equals(in_, lhs, rhs);
    case BinaryOp::StrictEq: return strict_equals(in_, lhs, rhs);
    case BinaryOp::StrictNe: return !strict_equals(in_, lhs, rhs);
    case BinaryOp::OpaqueLooseEq: return opaque_loose_equals(lhs, rhs);
    case BinaryOp::OpaqueStrictEq: return opaque_strict_equals(lhs, rhs);
    case BinaryOp::Add:
      if (is_string(lhs) || is_string(rhs)) return render(lhs) + render(rhs);
      return numeric_operand(lhs, b.op) + numeric_operand(rhs, b.op);
    case BinaryOp::Sub: return numeric_operand(lhs, b.op) - numeric_operand(rhs, b.op);
    case BinaryOp::Mul: return numeric_operand(lhs, b.op) * numeric_operand(rhs, b.op);
    case BinaryOp::Div: return numeric_operand(lhs, b.op) / numeric_operand(rhs, b.op);
    case BinaryOp::Less:
    case BinaryOp::LessEq:
    case BinaryOp::Greater:
    case BinaryOp::GreaterEq: {
      int cmp;
      if (is_string(lhs) && is_string(rhs)) {
        cmp = std::get<std::string>(lhs).compare(std::get<std::string>(rhs));
      } else {
        double l = numeric_operand(lhs, b.op);
        double r = numeric_operand(rhs, b.op);
        if (std::isnan(l) || std::isnan(r)) return false;
        cmp = l < r ? -1 : (l > r ? 1 : 0);
      }
      switch (b.op) {
        case BinaryOp::Less: return cmp < 0;
        case BinaryOp::LessEq: return cmp <= 0;
        case BinaryOp::Greater: return cmp > 0;
        default: return cmp >= 0;
      }
    }
    default: break;
  }
  return Undefined{};
}

Value Interpreter::call_script(const ScriptFunction& fn, const Value& this_value,
                               std::span<const Value> args) {
  CallFrame frame(*this);
  auto env = std::make_shared<Environment>();
  env->parent = fn.env;
  env->this_value = this_value;
  const auto& params = fn.code->params;
  for (std::size_t i = 0; i < params.size(); ++i) {
    env->bindings[params[i]] = i < args.size() ? args[i] : Value{Undefined{}};
  }
  struct Restore {
    bool& flag;
    bool saved;
    ~Restore() { flag = saved; }
  } restore{library_frame_, library_frame_};
  library_frame_ = fn.code->library;

  Value result = Undefined{};
  Evaluator(*this).exec_list(fn.code->body, env, result);
  return result;
}

}  // namespace proxylang
