#include <string>
#include <thread>

#include "doctest.h"
#include "proxylang/interpreter.hpp"
#include "proxylang/parser.hpp"
#include "support/test_support.hpp"

using namespace proxylang;
using proxylang::testing::run_script;

namespace {

bool recursion_succeeds(int n) {
  std::string src = "function f(n) { if (n <= 0) { return 0; } return f(n - 1) + 1; }\n"
                    "var r = f(" + std::to_string(n) + ");";
  return run_script(src).ok();
}

}  // namespace

TEST_CASE("call depth limit is exactly reached") {
  // f(n) occupies n + 1 frames.
  int lo = 0, hi = 5000;
  REQUIRE(recursion_succeeds(lo));
  REQUIRE_FALSE(recursion_succeeds(hi));
  while (hi - lo > 1) {
    int mid = (lo + hi) / 2;
    (recursion_succeeds(mid) ? lo : hi) = mid;
  }
  CHECK(lo + 1 == kMaxCallDepth);
  auto r = run_script("function f() { return f(); }\nf();");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind() == ErrorKind::StackOverflow);
}

TEST_CASE("long forwarding chains overflow instead of crashing") {
  auto r = run_script(R"(
    var p = {x: 1}; var i = 0;
    while (i < 3000) { p = new Proxy(p, {}); i = i + 1; }
    print(p.x);
  )");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind() == ErrorKind::StackOverflow);
}

TEST_CASE("typeofValue") {
  auto r = run_script(R"(
    var f = function () {};
    print(typeofValue(1), typeofValue("s"), typeofValue(false), typeofValue(null));
    print(typeofValue(undefined), typeofValue({}), typeofValue(f), typeofValue(print));
    print(typeofValue(new Proxy(f, {})), typeofValue(new Proxy({}, {})));
  )");
  REQUIRE(r.ok());
  CHECK(r.output ==
        "number string boolean null\n"
        "undefined object function function\n"
        "function object\n");
}

TEST_CASE("runtime error positions") {
  struct Case {
    const char* src;
    ErrorKind kind;
    int line, column;
  };
  const Case cases[] = {
      {"var x = 1;\nprint(y);", ErrorKind::ReferenceError, 2, 7},
      {"var o = {};\n  o.f();", ErrorKind::TypeError, 2, 3},
      {"var o = null;\nvar z = o.k;", ErrorKind::TypeError, 2, 9},
      {"Proxy({}, {});", ErrorKind::TypeError, 1, 1},
      {"var p = new Proxy({}, {});\nProxy.revoke(p);\np.x;", ErrorKind::RevokedProxyError, 3, 1},
  };
  for (const auto& c : cases) {
    CAPTURE(c.src);
    auto r = run_script(c.src);
    REQUIRE_FALSE(r.ok());
    CHECK(r.error->kind() == c.kind);
    REQUIRE(r.error->pos().has_value());
    CHECK(r.error->pos()->line == c.line);
    CHECK(r.error->pos()->column == c.column);
  }
}

TEST_CASE("errors inside library code are reported at the user call site") {
  auto r = run_script("var r = revocable({});\nr.revoke();\nprint(1);\n  r.proxy.x;");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind() == ErrorKind::RevokedProxyError);
  CHECK(r.error->pos()->line == 4);
  CHECK(r.output == "1\n");
}

TEST_CASE("output is deterministic") {
  const char* src = R"(
    var o = {b: 1, a: 2, c: 3}; var keys = Reflect.ownKeys(o);
    print(keys[0], keys[1], keys[2], 0.1 + 0.2, 1 / 3, 1e300 * 1e10);
  )";
  auto first = run_script(src);
  for (int i = 0; i < 5; ++i) CHECK(run_script(src).output == first.output);
  CHECK(first.output == "b a c 0.30000000000000004 0.3333333333333333 Infinity\n");
}

TEST_CASE("interpreters in different modes do not interfere") {
  const char* src = R"(
    var o = {}; var p = new Proxy(o, {isTransparent: function () { return true; }});
    print(p === o);
  )";
  InterpreterOptions opaque_opts, trap_opts;
  trap_opts.mode = EqualityMode::Trap;
  Interpreter opaque(opaque_opts), trap(trap_opts);
  for (int i = 0; i < 3; ++i) {
    CHECK(opaque.run(src).output == "false\n");
    CHECK(trap.run(src).output == "true\n");
  }
  std::string a, b;
  std::thread t1([&] { a = run_script(src, EqualityMode::Opaque).output; });
  std::thread t2([&] { b = run_script(src, EqualityMode::Trap).output; });
  t1.join();
  t2.join();
  CHECK(a == "false\n");
  CHECK(b == "true\n");
}

TEST_CASE("state persists across run() calls on one interpreter") {
  Interpreter interp;
  CHECK(interp.run("var x = 40;").ok());
  auto r = interp.run("print(x + 2);");
  CHECK(r.output == "42\n");
  CHECK(interp.output() == "42\n");
}

TEST_CASE("repl evaluation returns the last expression value") {
  Interpreter interp;
  auto v = interp.evaluate_repl(parse_source("var a = 2; a * 21;"));
  REQUIRE(v.has_value());
  CHECK(std::get<double>(*v) == 42.0);
  CHECK_FALSE(interp.evaluate_repl(parse_source("var b = 1;")).has_value());
}

TEST_CASE("contractViolation and functionName builtins") {
  auto r = run_script(R"(
    function named() {}
    print(functionName(named), functionName(function () {}));
    contractViolation("bad");
  )");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind() == ErrorKind::ContractViolation);
  CHECK(r.error->message() == "bad");
  CHECK(r.output.rfind("named ", 0) == 0);
}
