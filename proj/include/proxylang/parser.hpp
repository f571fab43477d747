#pragma once

#include <span>
#include <string_view>

#include "proxylang/ast.hpp"
#include "proxylang/token.hpp"

namespace proxylang {

/// Limits that keep parsing and evaluation within a bounded native stack:
/// recursive nesting (parentheses, unary operators, blocks, function
/// literals) and overall expression tree height.
inline constexpr int kMaxNesting = 256;
inline constexpr int kMaxExprDepth = 1000;

/// Prefix of the ParseError message raised when input ends early.
inline constexpr std::string_view kUnexpectedEnd = "unexpected end of input";

struct ParseOptions {
  // Mark every function as library code.
  bool library = false;
};

/// Builds a Program from tokens. Throws ScriptError (ParseError) carrying
/// the offending token's position and the set of tokens that would have been
/// accepted there.
ast::Program parse(std::span<const Token> tokens, ParseOptions options = {});

/// tokenize + parse.
ast::Program parse_source(std::string_view source, ParseOptions options = {});

}  // namespace proxylang
