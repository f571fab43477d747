#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "proxylang/errors.hpp"

namespace proxylang {

enum class TokenKind { Identifier, Number, String, Punctuator, Keyword };

struct Token {
  TokenKind kind;
  // Exact source text, including the quotes of a string literal.
  std::string lexeme;
  SourcePos pos;
  // Decoded contents of a string literal; empty for other kinds.
  std::string text;

  bool is(TokenKind k, std::string_view lex) const {
    return kind == k && lexeme == lex;
  }
  bool is_punct(std::string_view lex) const {
    return is(TokenKind::Punctuator, lex);
  }
  bool is_keyword(std::string_view lex) const {
    return is(TokenKind::Keyword, lex);
  }
};

std::string_view to_string(TokenKind kind);

/// Splits source into tokens using longest match. Throws ScriptError with
/// ErrorKind::LexError on an unrecognized character or unterminated literal.
std::vector<Token> tokenize(std::string_view source);

bool is_keyword(std::string_view word);

}  // namespace proxylang
