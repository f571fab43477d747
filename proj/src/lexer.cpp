#include <array>
#include <cctype>

#include <fmt/format.h>

#include "proxylang/token.hpp"

namespace proxylang {
namespace {

constexpr std::array<std::string_view, 12> kKeywords = {
    "var", "function", "if", "else", "while", "return",
    "true", "false", "null", "undefined", "new", "this"};

// Longest first, so the first prefix match is the maximal munch.
constexpr std::array<std::string_view, 29> kPunctuators = {
    ":===:", ":==:", "===", "!==", "==", "!=", "<=", ">=", "&&", "||",
    "=", "!", "<", ">", "+", "-", "*", "/", "(", ")", "{", "}", "[", "]",
    ",", ";", ".", ":", "?"};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_part(char c) {
  return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (skip_trivia()) {
      tokens.push_back(next_token());
    }
    return tokens;
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return offset_ + ahead < src_.size() ? src_[offset_ + ahead] : '\0';
  }
  bool at_end() const { return offset_ >= src_.size(); }

  void advance(std::size_t n = 1) {
    for (; n > 0 && !at_end(); --n) {
      if (src_[offset_] == '\n') {
        ++pos_.line;
        pos_.column = 1;
      } else {
        ++pos_.column;
      }
      ++offset_;
    }
  }

  [[noreturn]] void fail(SourcePos pos, std::string message) const {
    throw ScriptError(ErrorKind::LexError, std::move(message), pos);
  }

  // Skips whitespace and comments; false at end of input.
  bool skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        SourcePos start = pos_;
        advance(2);
        while (!(peek() == '*' && peek(1) == '/')) {
          if (at_end()) fail(start, "unterminated block comment");
          advance();
        }
        advance(2);
      } else {
        return true;
      }
    }
    return false;
  }

  Token make(TokenKind kind, std::size_t begin, SourcePos pos, std::string text = {}) {
    return Token{kind, std::string(src_.substr(begin, offset_ - begin)), pos,
                 std::move(text)};
  }

  Token next_token() {
    const std::size_t begin = offset_;
    const SourcePos pos = pos_;
    const char c = peek();

    if (is_ident_start(c)) {
      while (is_ident_part(peek())) advance();
      auto word = src_.substr(begin, offset_ - begin);
      return make(is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier,
                  begin, pos);
    }
    if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
      return number(begin, pos);
    }
    if (c == '"' || c == '\'') {
      return string(begin, pos, c);
    }
    for (std::string_view p : kPunctuators) {
      if (src_.substr(offset_).starts_with(p)) {
        advance(p.size());
        return make(TokenKind::Punctuator, begin, pos);
      }
    }
    auto byte = static_cast<unsigned char>(c);
    if (std::isprint(byte)) fail(pos, fmt::format("unexpected character '{}'", c));
    fail(pos, fmt::format("unexpected byte 0x{:02x}", byte));
  }

  Token number(std::size_t begin, SourcePos pos) {
    while (is_digit(peek())) advance();
    if (peek() == '.' && is_digit(peek(1))) {
      advance();
      while (is_digit(peek())) advance();
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t sign = (peek(1) == '+' || peek(1) == '-') ? 1 : 0;
      if (!is_digit(peek(1 + sign))) fail(pos_, "malformed exponent in number literal");
      advance(1 + sign);
      while (is_digit(peek())) advance();
    }
    if (is_ident_start(peek())) fail(pos_, "identifier starts immediately after number");
    return make(TokenKind::Number, begin, pos);
  }

  Token string(std::size_t begin, SourcePos pos, char quote) {
    advance();
    std::string text;
    while (true) {
      if (at_end() || peek() == '\n') fail(pos, "unterminated string literal");
      char c = peek();
      if (c == quote) {
        advance();
        break;
      }
      if (c == '\\') {
        SourcePos esc = pos_;
        advance();
        switch (peek()) {
          case 'n': text += '\n'; break;
          case 't': text += '\t'; break;
          case '"': text += '"'; break;
          case '\'': text += '\''; break;
          case '\\': text += '\\'; break;
          default:
            if (at_end()) fail(pos, "unterminated string literal");
            fail(esc, "unsupported escape sequence");
        }
        advance();
        continue;
      }
      text += c;
      advance();
    }
    return make(TokenKind::String, begin, pos, std::move(text));
  }

  std::string_view src_;
  std::size_t offset_ = 0;
  SourcePos pos_;
};

}  // namespace

bool is_keyword(std::string_view word) {
  for (auto kw : kKeywords) {
    if (kw == word) return true;
  }
  return false;
}

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::String: return "string";
    case TokenKind::Punctuator: return "punctuator";
    case TokenKind::Keyword: return "keyword";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view source) {
  return Lexer(source).run();
}

}  // namespace proxylang
