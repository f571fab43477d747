#pragma once

#include <string>

#include "proxylang/ast.hpp"

namespace proxylang {

/// Renders a Program back to source. Binary, unary and conditional
/// expressions are fully parenthesized so that reparsing yields the same tree.
std::string pretty_print(const ast::Program& program);

/// Position-free S-expression dump; two programs are structurally equal iff
/// their dumps are equal.
std::string to_sexpr(const ast::Program& program);

}  // namespace proxylang
