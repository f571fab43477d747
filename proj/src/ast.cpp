#include "proxylang/ast.hpp"

namespace proxylang::ast {

std::string_view to_string(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Less: return "<";
    case BinaryOp::LessEq: return "<=";
    case BinaryOp::Greater: return ">";
    case BinaryOp::GreaterEq: return ">=";
    case BinaryOp::LooseEq: return "==";
    case BinaryOp::LooseNe: return "!=";
    case BinaryOp::StrictEq: return "===";
    case BinaryOp::StrictNe: return "!==";
    case BinaryOp::OpaqueLooseEq: return ":==:";
    case BinaryOp::OpaqueStrictEq: return ":===:";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
  }
  return "?";
}

std::string_view to_string(UnaryOp op) { return op == UnaryOp::Not ? "!" : "-"; }

bool is_equality(BinaryOp op) {
  switch (op) {
    case BinaryOp::LooseEq:
    case BinaryOp::LooseNe:
    case BinaryOp::StrictEq:
    case BinaryOp::StrictNe:
    case BinaryOp::OpaqueLooseEq:
    case BinaryOp::OpaqueStrictEq:
      return true;
    default:
      return false;
  }
}

}  // namespace proxylang::ast
