#include <filesystem>
#include <random>
#include <string>

#include "doctest.h"
#include "proxylang/corpus.hpp"
#include "proxylang/errors.hpp"
#include "proxylang/parser.hpp"
#include "proxylang/prelude.hpp"
#include "proxylang/printer.hpp"
#include "proxylang/token.hpp"

using namespace proxylang;

namespace {

ScriptError parse_error(std::string_view src) {
  try {
    parse_source(src);
  } catch (const ScriptError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << src);
  return ScriptError(ErrorKind::ParseError, "");
}

void check_round_trip(std::string_view src) {
  auto first = parse_source(src);
  std::string printed = pretty_print(first);
  auto second = parse_source(printed);
  CHECK(to_sexpr(first) == to_sexpr(second));
  CHECK(pretty_print(second) == printed);
}

}  // namespace

TEST_CASE("simple comparison statement") {
  auto program = parse_source("1 === 1;");
  CHECK(to_sexpr(program) == to_sexpr(parse_source("(1 === 1);")));
  CHECK(to_sexpr(program) != to_sexpr(parse_source("1 == 1;")));
}

TEST_CASE("isProxy snippet parses with equality operators as siblings") {
  auto program = parse_source("var isProxy = ((objA==objB) != (objA:==:objB));");
  std::string s = to_sexpr(program);
  CHECK(s.find("!=") != std::string::npos);
  CHECK(s.find(":==:") != std::string::npos);
  check_round_trip("var isProxy = ((objA==objB) != (objA:==:objB));");
}

TEST_CASE("new Proxy(...) is a construction, not a call of a construction") {
  auto a = to_sexpr(parse_source("new Proxy(t, {});"));
  auto b = to_sexpr(parse_source("(new Proxy)(t, {});"));
  CHECK(a.find("new") != std::string::npos);
  CHECK(a != b);
}

TEST_CASE("mixing equality operators without parentheses is rejected") {
  auto e = parse_error("a == b :==: c;");
  CHECK(e.kind() == ErrorKind::ParseError);
  REQUIRE(e.pos().has_value());
  CHECK(e.pos()->column == 8);
  CHECK(e.message().find("expected") != std::string::npos);
  CHECK(e.message().find("==") != std::string::npos);
  // Same operator repeated is fine.
  CHECK_NOTHROW(parse_source("a == b == c;"));
  CHECK_NOTHROW(parse_source("(a == b) :==: c;"));
}

TEST_CASE("return outside a function") {
  CHECK(parse_error("return 1;").kind() == ErrorKind::ParseError);
  CHECK_NOTHROW(parse_source("function f() { return 1; }"));
}

TEST_CASE("unexpected end of input is reported as such") {
  for (std::string_view src : {"var x = ", "function f() {", "if (a) { b;", "f(1, 2"}) {
    auto e = parse_error(src);
    CHECK(e.message().rfind(kUnexpectedEnd, 0) == 0);
  }
}

TEST_CASE("nesting limit") {
  std::string ok(kMaxNesting - 1, '(');
  ok += "1" + std::string(kMaxNesting - 1, ')') + ";";
  CHECK_NOTHROW(parse_source(ok));
  std::string deep(kMaxNesting + 50, '(');
  deep += "1" + std::string(kMaxNesting + 50, ')') + ";";
  CHECK(parse_error(deep).kind() == ErrorKind::ParseError);
  std::string long_chain = "x = 1";
  for (int i = 0; i < kMaxExprDepth + 10; ++i) long_chain += " + 1";
  CHECK(parse_error(long_chain + ";").kind() == ErrorKind::ParseError);
}

TEST_CASE("pretty-print round trip over the corpus and the prelude") {
  namespace fs = std::filesystem;
  check_round_trip(embedded_prelude());
  int count = 0;
  for (const auto& dir : {"corpus", "contracts"}) {
    for (const auto& entry : fs::directory_iterator(fs::path(PROXYLANG_TESTS_DIR) / dir)) {
      if (entry.path().extension() != ".plx") continue;
      CAPTURE(entry.path().string());
      check_round_trip(read_file(entry.path()));
      ++count;
    }
  }
  CHECK(count > 20);
}

TEST_CASE("round trip of assorted constructs") {
  check_round_trip("if (a) { b; } else if (c) { d; } else { e; }");
  check_round_trip("var f = function (x, y) { return x ? -y : !y; };");
  check_round_trip("o.p.q = o[\"k\" + 1](2).r; new F(1).g();");
  check_round_trip("while (i < 3) { i = i + 1; } print(\"a\\n\\\"b\");");
  check_round_trip("x = a || b && c; y = (a || b) && c; z = 1 - (2 - 3);");
}

TEST_CASE("error positions lie inside the source") {
  std::mt19937 rng(3);
  const std::string alphabet = "ab1 ()={};,.+-:!\"\n";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int round = 0; round < 3000; ++round) {
    std::string src;
    for (int i = 0; i < 1 + round % 30; ++i) src += alphabet[pick(rng)];
    int lines = 1;
    for (char c : src) lines += c == '\n';
    try {
      parse_source(src);
    } catch (const ScriptError& e) {
      CHECK((e.kind() == ErrorKind::LexError || e.kind() == ErrorKind::ParseError));
      REQUIRE(e.pos().has_value());
      CHECK(e.pos()->line >= 1);
      CHECK(e.pos()->line <= lines);
      CHECK(e.pos()->column >= 1);
      CHECK(e.pos()->column <= static_cast<int>(src.size()) + 1);
    }
  }
}
