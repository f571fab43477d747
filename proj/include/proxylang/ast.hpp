#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "proxylang/errors.hpp"

namespace proxylang::ast {

struct Expr;
struct Stmt;
using ExprPtr = std::unique_ptr<Expr>;
using StmtPtr = std::unique_ptr<Stmt>;

enum class BinaryOp {
  Add, Sub, Mul, Div,
  Less, LessEq, Greater, GreaterEq,
  LooseEq, LooseNe, StrictEq, StrictNe, OpaqueLooseEq, OpaqueStrictEq,
  And, Or,
};

enum class UnaryOp { Not, Negate };

std::string_view to_string(BinaryOp op);
std::string_view to_string(UnaryOp op);
bool is_equality(BinaryOp op);

/// Parameters and body of a function literal or declaration. Shared so that
/// closures keep their code alive after the Program that produced it is gone.
struct FunctionData {
  std::string name;  // empty for anonymous function expressions
  std::vector<std::string> params;
  std::vector<StmtPtr> body;
  SourcePos pos;
  // Defined by the prelude rather than user code; errors surfacing inside
  // library frames are positioned at the calling user expression.
  bool library = false;
};

struct NumberLit { double value; };
struct StringLit { std::string value; };
struct BoolLit { bool value; };
struct NullLit {};
struct UndefinedLit {};
struct ThisExpr {};
struct Identifier { std::string name; };
struct ObjectLit { std::vector<std::pair<std::string, ExprPtr>> properties; };
struct FunctionExpr { std::shared_ptr<const FunctionData> fn; };

/// `object.name` when `computed` is null, `object[computed]` otherwise.
struct PropertyGet {
  ExprPtr object;
  std::string name;
  ExprPtr computed;
};

struct Call { ExprPtr callee; std::vector<ExprPtr> args; };

/// `object.name(args)` / `object[computed](args)`: the receiver becomes `this`.
struct MethodCall {
  ExprPtr object;
  std::string name;
  ExprPtr computed;
  std::vector<ExprPtr> args;
};

struct New { ExprPtr callee; std::vector<ExprPtr> args; };
struct Binary { BinaryOp op; ExprPtr lhs; ExprPtr rhs; };
struct Unary { UnaryOp op; ExprPtr operand; };
struct Conditional { ExprPtr test; ExprPtr then_expr; ExprPtr else_expr; };

struct Expr {
  using Node = std::variant<NumberLit, StringLit, BoolLit, NullLit,
                            UndefinedLit, ThisExpr, Identifier, ObjectLit,
                            FunctionExpr, PropertyGet, Call, MethodCall, New,
                            Binary, Unary, Conditional>;
  Node node;
  SourcePos pos;
  int depth = 1;
};

struct VarDecl { std::string name; ExprPtr init; };

/// `target = value;` where target is an Identifier or a PropertyGet (the
/// latter is the property-set form).
struct Assign { ExprPtr target; ExprPtr value; };

struct ExprStmt { ExprPtr expr; };
struct Block { std::vector<StmtPtr> body; };
struct If { ExprPtr test; Block then_block; std::optional<Block> else_block; };
struct While { ExprPtr test; Block body; };
struct Return { ExprPtr value; };  // value may be null
struct FunctionDecl { std::shared_ptr<const FunctionData> fn; };

struct Stmt {
  using Node = std::variant<VarDecl, Assign, ExprStmt, If, While, Return,
                            Block, FunctionDecl>;
  Node node;
  SourcePos pos;
};

struct Program {
  std::vector<StmtPtr> statements;
};

template <class T>
ExprPtr make_expr(T node, SourcePos pos, int depth = 1) {
  return std::make_unique<Expr>(Expr{std::move(node), pos, depth});
}

template <class T>
StmtPtr make_stmt(T node, SourcePos pos) {
  return std::make_unique<Stmt>(Stmt{std::move(node), pos});
}

}  // namespace proxylang::ast
