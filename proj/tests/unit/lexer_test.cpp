#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "proxylang/errors.hpp"
#include "proxylang/parser.hpp"
#include "proxylang/token.hpp"

using namespace proxylang;

namespace {

std::vector<std::string> lexemes(std::string_view src) {
  std::vector<std::string> out;
  for (const auto& t : tokenize(src)) out.push_back(t.lexeme);
  return out;
}

}  // namespace

TEST_CASE("empty and whitespace-only sources have no tokens") {
  CHECK(tokenize("").empty());
  CHECK(tokenize("  \n\t // comment only\n").empty());
}

TEST_CASE("proxy construction line") {
  auto toks = tokenize("var objA = new Proxy(objB, {});");
  std::vector<std::string> expected = {"var", "objA", "=",  "new", "Proxy", "(",
                                       "objB", ",",   "{",  "}",   ")",     ";"};
  CHECK(lexemes("var objA = new Proxy(objB, {});") == expected);
  CHECK(toks[0].kind == TokenKind::Keyword);
  CHECK(toks[1].kind == TokenKind::Identifier);
  CHECK(toks[3].kind == TokenKind::Keyword);
  CHECK(toks[4].kind == TokenKind::Identifier);
}

TEST_CASE("opaque operators are single tokens") {
  CHECK(lexemes("a:===:b") == std::vector<std::string>{"a", ":===:", "b"});
  CHECK(lexemes("a:==:b") == std::vector<std::string>{"a", ":==:", "b"});
  CHECK(lexemes("a===b") == std::vector<std::string>{"a", "===", "b"});
  CHECK(lexemes("a!==b!=c") == std::vector<std::string>{"a", "!==", "b", "!=", "c"});
}

TEST_CASE("only the single-token split of :===: parses") {
  // Every way of cutting ":===:" into pieces, lexed separately and joined by
  // spaces. Only the uncut form is a valid expression.
  const std::string op = ":===:";
  int accepted = 0;
  for (unsigned mask = 0; mask < (1u << (op.size() - 1)); ++mask) {
    std::string spaced;
    for (std::size_t i = 0; i < op.size(); ++i) {
      spaced += op[i];
      if (i + 1 < op.size() && (mask & (1u << i))) spaced += ' ';
    }
    std::string src = "a " + spaced + " b;";
    bool ok = true;
    try {
      parse_source(src);
    } catch (const ScriptError&) {
      ok = false;
    }
    if (ok) {
      ++accepted;
      CHECK(mask == 0);
    }
  }
  CHECK(accepted == 1);
}

TEST_CASE("string literal escapes") {
  auto toks = tokenize(R"("a\n\t\"\'\\b" 'x')");
  REQUIRE(toks.size() == 2);
  CHECK(toks[0].kind == TokenKind::String);
  CHECK(toks[0].text == "a\n\t\"'\\b");
  CHECK(toks[1].text == "x");
}

TEST_CASE("token positions are 1-based line and column") {
  auto toks = tokenize("a\n  bb = 1;");
  REQUIRE(toks.size() == 5);
  CHECK(toks[0].pos.line == 1);
  CHECK(toks[0].pos.column == 1);
  CHECK(toks[1].pos.line == 2);
  CHECK(toks[1].pos.column == 3);
  CHECK(toks[2].pos.column == 6);
}

TEST_CASE("lex errors carry positions") {
  for (std::string_view src : {"var x = 1;\n  @", "\"unterminated", "x = 'a\nb'", "#"}) {
    try {
      tokenize(src);
      FAIL("expected a LexError for: " << src);
    } catch (const ScriptError& e) {
      CHECK(e.kind() == ErrorKind::LexError);
      REQUIRE(e.pos().has_value());
      CHECK(e.pos()->line >= 1);
      CHECK(e.pos()->column >= 1);
    }
  }
  try {
    tokenize("var x = 1;\n  @");
  } catch (const ScriptError& e) {
    CHECK(e.pos()->line == 2);
    CHECK(e.pos()->column == 3);
  }
}

TEST_CASE("random token sequences lex back to their lexemes") {
  const std::vector<std::string> vocab = {
      "var", "function", "return", "if", "else", "while", "new", "true", "false",
      "null", "undefined", "this", "foo", "_x1", "objA", "0", "42", "3.5", "1e3",
      "\"s\"", "'t'", "\"esc\\n\"", "==", "===", "!=", "!==", ":==:", ":===:", "=",
      "+", "-", "*", "/", "<", "<=", ">", ">=", "&&", "||", "!", "?", ":", "(",
      ")", "{", "}", "[", "]", ",", ";", "."};
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  for (int round = 0; round < 2000; ++round) {
    std::vector<std::string> chosen;
    std::string src;
    int n = 1 + round % 12;
    for (int i = 0; i < n; ++i) {
      chosen.push_back(vocab[pick(rng)]);
      src += chosen.back();
      src += (i % 3 == 0) ? "\n" : " ";
    }
    REQUIRE(lexemes(src) == chosen);
  }
}

TEST_CASE("random bytes either lex or raise LexError") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int round = 0; round < 3000; ++round) {
    std::string src;
    int n = round % 40;
    for (int i = 0; i < n; ++i) src += static_cast<char>(byte(rng));
    try {
      tokenize(src);
    } catch (const ScriptError& e) {
      CHECK(e.kind() == ErrorKind::LexError);
    }
  }
}
