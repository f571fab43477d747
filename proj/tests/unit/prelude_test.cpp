#include <filesystem>
#include <string>

#include "doctest.h"
#include "proxylang/corpus.hpp"
#include "proxylang/interpreter.hpp"
#include "support/test_support.hpp"

using namespace proxylang;
using proxylang::testing::run_script;

namespace {

std::string contract_script(const char* name, bool contracts) {
  return std::string("var CONTRACTS = ") + (contracts ? "true" : "false") + ";\n" +
         read_file(std::filesystem::path(PROXYLANG_TESTS_DIR) / "contracts" / name);
}

}  // namespace

TEST_CASE("revocable forwards until revoked") {
  auto r = run_script(R"(
    var t = {x: 1};
    var r = revocable(t);
    r.proxy.x = 2;
    print(t.x, r.proxy.x, Reflect.has(r.proxy, "x"));
    r.revoke();
    r.revoke();
    print(t.x);
    r.proxy.x;
  )");
  CHECK(r.output == "2 2 true\n2\n");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind() == ErrorKind::RevokedProxyError);
}

TEST_CASE("membrane wraps reachable objects once and unwraps on the way in") {
  auto r = run_script(R"(
    var inner = {v: 1};
    var root = {inner: inner, put: function (o) { this.last = o; return o === inner; }};
    var m = membrane(root);
    var w = m.wrapper;
    print(w.inner :===: inner, w.inner :===: w.inner, w.inner.v);
    print(w.put(w.inner), root.last :===: inner);
    m.revoke();
    print(inner.v);
    w.inner;
  )");
  CHECK(r.output == "false true 1\ntrue true\n1\n");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind() == ErrorKind::RevokedProxyError);
}

TEST_CASE("membrane revoke reaches every wrapper") {
  auto r = run_script(R"(
    var m = membrane({a: {b: {c: 1}}});
    var b = m.wrapper.a.b;
    m.revoke();
    b.c;
  )");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind() == ErrorKind::RevokedProxyError);
}

TEST_CASE("property contracts") {
  auto r = run_script(R"(
    function positive(x) { return x > 0; }
    var acct = {balance: 10};
    var c = contract_property(acct, "balance", positive);
    c.balance = 5;
    c.other = -1;
    print(acct.balance, acct.other);
    c.balance = -3;
  )");
  CHECK(r.output == "5 -1\n");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind() == ErrorKind::ContractViolation);
  CHECK(r.error->message() == "property 'balance' rejected value -3 (positive)");
}

TEST_CASE("method contracts check arguments and results") {
  const char* prefix = R"(
    function isNumber(x) { return typeofValue(x) == "number"; }
    function small(x) { return x < 10; }
    var calc = {double: function (x) { return x * 2; }};
    var c = contract_method(calc, "double", isNumber, small);
  )";
  auto ok = run_script(std::string(prefix) + "print(c.double(3), c.double :===: c.double);");
  CHECK(ok.output == "6 true\n");
  auto bad_arg = run_script(std::string(prefix) + "c.double(\"x\");");
  REQUIRE_FALSE(bad_arg.ok());
  CHECK(bad_arg.error->message() == "argument 0 of 'double' rejected value x (isNumber)");
  auto bad_result = run_script(std::string(prefix) + "c.double(7);");
  REQUIRE_FALSE(bad_result.ok());
  CHECK(bad_result.error->message() == "result of 'double' rejected value 14 (small)");
  auto not_method = run_script(std::string(prefix) + "contract_method(calc, \"nope\", small, small);");
  REQUIRE_FALSE(not_method.ok());
  CHECK(not_method.error->kind() == ErrorKind::ContractViolation);
}

TEST_CASE("contract scripts print the same with and without contracts under trap equality") {
  for (const char* name : {"bank.plx", "typed_calc.plx", "stacked.plx"}) {
    CAPTURE(name);
    auto without = run_script(contract_script(name, false), EqualityMode::Trap);
    auto with = run_script(contract_script(name, true), EqualityMode::Trap);
    CHECK(without.ok());
    CHECK(with.ok());
    CHECK(with.output == without.output);
    CHECK(with.output.find("probe:") != std::string::npos);
  }
}

TEST_CASE("under opaque equality contracts change identity-sensitive output") {
  for (const char* name : {"bank.plx", "typed_calc.plx", "stacked.plx"}) {
    CAPTURE(name);
    auto without = run_script(contract_script(name, false), EqualityMode::Opaque);
    auto with = run_script(contract_script(name, true), EqualityMode::Opaque);
    CHECK(with.ok());
    CHECK(with.output != without.output);
    CHECK(with.output.find("probe: false") != std::string::npos);
  }
}

TEST_CASE("scripts can run without the prelude") {
  InterpreterOptions o;
  o.load_prelude = false;
  Interpreter interp(o);
  auto r = interp.run("revocable({});");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind() == ErrorKind::ReferenceError);
}
