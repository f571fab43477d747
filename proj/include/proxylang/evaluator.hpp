#pragma once

#include <span>
#include <string>
#include <vector>

#include "proxylang/ast.hpp"
#include "proxylang/interpreter.hpp"

namespace proxylang {

enum class Flow { Normal, Return };

/// Statement and expression evaluation against one interpreter. Runtime
/// errors leaving an expression without a position get that expression's
/// position.
class Evaluator {
 public:
  explicit Evaluator(Interpreter& interp);

  /// Runs body in env after binding its function declarations. On Return,
  /// result holds the returned value.
  Flow exec_list(const std::vector<ast::StmtPtr>& body, const EnvPtr& env, Value& result);
  Flow exec(const ast::Stmt& s, const EnvPtr& env, Value& result);
  Value eval(const ast::Expr& e, const EnvPtr& env);
  void hoist(const std::vector<ast::StmtPtr>& body, const EnvPtr& env);

 private:
  Flow exec_node(const ast::Stmt& s, const EnvPtr& env, Value& result);
  Flow exec_scoped(const ast::Block& block, const EnvPtr& parent, Value& result);
  Value eval_node(const ast::Expr& e, const EnvPtr& env);
  Value binary(const ast::Binary& b, const EnvPtr& env);
  void assign(const ast::Assign& a, const EnvPtr& env);
  Value make_closure(const std::shared_ptr<const ast::FunctionData>& fn, const EnvPtr& env);
  Value read_property(const Value& object, const std::string& key);
  std::vector<Value> eval_args(const std::vector<ast::ExprPtr>& args, const EnvPtr& env);
  Value invoke(const Value& fn, const Value& this_value, std::span<const Value> args,
               const ast::Expr& callee);
  void stamp(ScriptError& err, SourcePos pos) const;

  Interpreter& in_;
};

}  // namespace proxylang
