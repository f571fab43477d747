#include "proxylang/parser.hpp"

#include <algorithm>
#include <charconv>
#include <initializer_list>
#include <limits>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "proxylang/value.hpp"

namespace proxylang {
namespace {

using namespace ast;

struct EqualityToken {
  std::string_view lexeme;
  BinaryOp op;
};

constexpr EqualityToken kEqualityOps[] = {
    {"==", BinaryOp::LooseEq},         {"!=", BinaryOp::LooseNe},
    {"===", BinaryOp::StrictEq},       {"!==", BinaryOp::StrictNe},
    {":==:", BinaryOp::OpaqueLooseEq}, {":===:", BinaryOp::OpaqueStrictEq},
};

// Tokens that may legally follow a complete equality expression.
constexpr std::string_view kAfterEquality[] = {"&&", "||", "?", ":", ",",
                                               ")", "]", "}", ";"};

int depth_of(const ExprPtr& e) { return e ? e->depth : 0; }

class Parser {
 public:
  Parser(std::span<const Token> tokens, ParseOptions options)
      : toks_(tokens), options_(options) {
    if (!toks_.empty()) {
      const Token& last = toks_.back();
      end_pos_ = {last.pos.line,
                  last.pos.column + static_cast<int>(last.lexeme.size())};
    }
  }

  Program program() {
    Program prog;
    while (!at_end()) prog.statements.push_back(statement());
    return prog;
  }

 private:
  class Nest {
   public:
    explicit Nest(Parser& p) : p_(p) {
      if (++p_.nesting_ > kMaxNesting) p_.fail_here("nesting too deep");
    }
    ~Nest() { --p_.nesting_; }

   private:
    Parser& p_;
  };

  bool at_end() const { return cur_ >= toks_.size(); }
  const Token* peek(std::size_t ahead = 0) const {
    return cur_ + ahead < toks_.size() ? &toks_[cur_ + ahead] : nullptr;
  }
  SourcePos here() const { return at_end() ? end_pos_ : toks_[cur_].pos; }

  bool check_punct(std::string_view p) const {
    return !at_end() && toks_[cur_].is_punct(p);
  }
  bool check_keyword(std::string_view k) const {
    return !at_end() && toks_[cur_].is_keyword(k);
  }
  bool match_punct(std::string_view p) {
    if (!check_punct(p)) return false;
    ++cur_;
    return true;
  }
  bool match_keyword(std::string_view k) {
    if (!check_keyword(k)) return false;
    ++cur_;
    return true;
  }

  std::string describe_current() const {
    if (at_end()) return std::string(kUnexpectedEnd);
    return fmt::format("unexpected {} '{}'", to_string(toks_[cur_].kind),
                       toks_[cur_].lexeme);
  }

  [[noreturn]] void fail_here(std::string_view what) const {
    if (at_end()) {
      throw ScriptError(ErrorKind::ParseError,
                        fmt::format("{}; {}", kUnexpectedEnd, what), here());
    }
    throw ScriptError(ErrorKind::ParseError,
                      fmt::format("{}; {}", describe_current(), what), here());
  }

  [[noreturn]] void expected(std::initializer_list<std::string_view> options) const {
    std::vector<std::string> quoted;
    for (auto o : options) quoted.push_back(fmt::format("'{}'", o));
    if (quoted.size() == 1) {
      fail_here(fmt::format("expected {}", quoted.front()));
    }
    fail_here(fmt::format("expected one of: {}", fmt::join(quoted, ", ")));
  }

  void expect_punct(std::string_view p) {
    if (!match_punct(p)) expected({p});
  }

  std::string expect_identifier() {
    if (at_end() || toks_[cur_].kind != TokenKind::Identifier) expected({"identifier"});
    return toks_[cur_++].lexeme;
  }

  // ---- statements ---------------------------------------------------------

  StmtPtr statement() {
    SourcePos pos = here();
    if (match_keyword("var")) {
      std::string name = expect_identifier();
      expect_punct("=");
      ExprPtr init = expression();
      expect_punct(";");
      return make_stmt(VarDecl{std::move(name), std::move(init)}, pos);
    }
    if (check_keyword("function") && peek(1) &&
        peek(1)->kind == TokenKind::Identifier) {
      ++cur_;
      return make_stmt(FunctionDecl{function_rest(pos, expect_identifier())}, pos);
    }
    if (match_keyword("if")) return if_rest(pos);
    if (match_keyword("while")) {
      expect_punct("(");
      ExprPtr test = expression();
      expect_punct(")");
      Block body = block();
      return make_stmt(While{std::move(test), std::move(body)}, pos);
    }
    if (check_keyword("return")) {
      if (function_depth_ == 0) fail_here("return is only valid inside a function");
      ++cur_;
      ExprPtr value;
      if (!check_punct(";")) value = expression();
      expect_punct(";");
      return make_stmt(Return{std::move(value)}, pos);
    }
    if (check_punct("{")) return make_stmt(block(), pos);

    ExprPtr expr = expression();
    if (match_punct("=")) {
      const bool assignable = std::holds_alternative<Identifier>(expr->node) ||
                              std::holds_alternative<PropertyGet>(expr->node);
      if (!assignable) {
        throw ScriptError(ErrorKind::ParseError,
                          "invalid assignment target; expected an identifier "
                          "or a property access",
                          expr->pos);
      }
      ExprPtr value = expression();
      expect_punct(";");
      return make_stmt(Assign{std::move(expr), std::move(value)}, pos);
    }
    if (!match_punct(";")) expected({";", "="});
    return make_stmt(ExprStmt{std::move(expr)}, pos);
  }

  StmtPtr if_rest(SourcePos pos) {
    expect_punct("(");
    ExprPtr test = expression();
    expect_punct(")");
    Block then_block = block();
    std::optional<Block> else_block;
    if (match_keyword("else")) {
      if (check_keyword("if")) {
        // `else if` is sugar for an else block holding the nested if.
        SourcePos inner = here();
        ++cur_;
        Nest nest(*this);
        Block wrapped;
        wrapped.body.push_back(if_rest(inner));
        else_block = std::move(wrapped);
      } else {
        else_block = block();
      }
    }
    return make_stmt(If{std::move(test), std::move(then_block), std::move(else_block)},
                     pos);
  }

  Block block() {
    Nest nest(*this);
    expect_punct("{");
    Block b;
    while (!check_punct("}")) {
      if (at_end()) expected({"}"});
      b.body.push_back(statement());
    }
    ++cur_;
    return b;
  }

  std::shared_ptr<const FunctionData> function_rest(SourcePos pos, std::string name) {
    auto fn = std::make_shared<FunctionData>();
    fn->name = std::move(name);
    fn->pos = pos;
    fn->library = options_.library;
    ++function_depth_;
    expect_punct("(");
    if (!check_punct(")")) {
      do {
        fn->params.push_back(expect_identifier());
      } while (match_punct(","));
    }
    expect_punct(")");
    fn->body = block().body;
    --function_depth_;
    return fn;
  }

  // ---- expressions --------------------------------------------------------

  ExprPtr finish(Expr::Node node, SourcePos pos, int depth) {
    if (depth > kMaxExprDepth) {
      throw ScriptError(ErrorKind::ParseError, "expression nesting too deep", pos);
    }
    return std::make_unique<Expr>(Expr{std::move(node), pos, depth});
  }

  ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
    SourcePos pos = lhs->pos;
    int depth = 1 + std::max(depth_of(lhs), depth_of(rhs));
    return finish(Binary{op, std::move(lhs), std::move(rhs)}, pos, depth);
  }

  ExprPtr expression() {
    Nest nest(*this);
    return conditional();
  }

  ExprPtr conditional() {
    ExprPtr test = logical_or();
    if (!match_punct("?")) return test;
    ExprPtr then_expr = expression();
    expect_punct(":");
    ExprPtr else_expr = expression();
    SourcePos pos = test->pos;
    int depth = 1 + std::max({depth_of(test), depth_of(then_expr), depth_of(else_expr)});
    return finish(Conditional{std::move(test), std::move(then_expr), std::move(else_expr)},
                  pos, depth);
  }

  ExprPtr logical_or() {
    ExprPtr lhs = logical_and();
    while (match_punct("||")) lhs = binary(BinaryOp::Or, std::move(lhs), logical_and());
    return lhs;
  }

  ExprPtr logical_and() {
    ExprPtr lhs = equality();
    while (match_punct("&&")) lhs = binary(BinaryOp::And, std::move(lhs), equality());
    return lhs;
  }

  std::optional<EqualityToken> equality_token() const {
    if (at_end() || toks_[cur_].kind != TokenKind::Punctuator) return std::nullopt;
    for (const auto& e : kEqualityOps) {
      if (toks_[cur_].lexeme == e.lexeme) return e;
    }
    return std::nullopt;
  }

  // All six operators share one tier. A chain may repeat one operator but
  // never mixes two different ones without parentheses.
  ExprPtr equality() {
    ExprPtr lhs = relational();
    std::optional<EqualityToken> first;
    while (auto tok = equality_token()) {
      if (first && first->op != tok->op) {
        std::vector<std::string> allowed{fmt::format("'{}'", first->lexeme)};
        for (auto a : kAfterEquality) allowed.push_back(fmt::format("'{}'", a));
        fail_here(fmt::format(
            "equality operators cannot be mixed without parentheses; expected one of: {}",
            fmt::join(allowed, ", ")));
      }
      first = tok;
      ++cur_;
      lhs = binary(tok->op, std::move(lhs), relational());
    }
    return lhs;
  }

  ExprPtr relational() {
    ExprPtr lhs = additive();
    while (true) {
      BinaryOp op;
      if (match_punct("<")) op = BinaryOp::Less;
      else if (match_punct("<=")) op = BinaryOp::LessEq;
      else if (match_punct(">")) op = BinaryOp::Greater;
      else if (match_punct(">=")) op = BinaryOp::GreaterEq;
      else return lhs;
      lhs = binary(op, std::move(lhs), additive());
    }
  }

  ExprPtr additive() {
    ExprPtr lhs = multiplicative();
    while (true) {
      BinaryOp op;
      if (match_punct("+")) op = BinaryOp::Add;
      else if (match_punct("-")) op = BinaryOp::Sub;
      else return lhs;
      lhs = binary(op, std::move(lhs), multiplicative());
    }
  }

  ExprPtr multiplicative() {
    ExprPtr lhs = unary();
    while (true) {
      BinaryOp op;
      if (match_punct("*")) op = BinaryOp::Mul;
      else if (match_punct("/")) op = BinaryOp::Div;
      else return lhs;
      lhs = binary(op, std::move(lhs), unary());
    }
  }

  ExprPtr unary() {
    SourcePos pos = here();
    UnaryOp op;
    if (match_punct("!")) op = UnaryOp::Not;
    else if (match_punct("-")) op = UnaryOp::Negate;
    else return postfix();
    Nest nest(*this);
    ExprPtr operand = unary();
    int depth = 1 + operand->depth;
    return finish(Unary{op, std::move(operand)}, pos, depth);
  }

  std::vector<ExprPtr> arguments(int& depth) {
    std::vector<ExprPtr> args;
    expect_punct("(");
    if (!check_punct(")")) {
      do {
        args.push_back(expression());
        depth = std::max(depth, 1 + args.back()->depth);
      } while (match_punct(","));
    }
    expect_punct(")");
    return args;
  }

  std::string property_name() {
    if (at_end() || (toks_[cur_].kind != TokenKind::Identifier &&
                     toks_[cur_].kind != TokenKind::Keyword)) {
      expected({"property name"});
    }
    return toks_[cur_++].lexeme;
  }

  // Member accesses without calls: the callee of `new`.
  ExprPtr member_chain(ExprPtr expr) {
    while (true) {
      if (match_punct(".")) {
        std::string name = property_name();
        SourcePos pos = expr->pos;
        int depth = 1 + expr->depth;
        expr = finish(PropertyGet{std::move(expr), std::move(name), nullptr}, pos, depth);
      } else if (check_punct("[")) {
        ++cur_;
        ExprPtr key = expression();
        expect_punct("]");
        SourcePos pos = expr->pos;
        int depth = 1 + std::max(expr->depth, key->depth);
        expr = finish(PropertyGet{std::move(expr), {}, std::move(key)}, pos, depth);
      } else {
        return expr;
      }
    }
  }

  ExprPtr postfix() {
    ExprPtr expr;
    if (check_keyword("new")) {
      SourcePos pos = here();
      ++cur_;
      Nest nest(*this);
      ExprPtr callee = member_chain(primary());
      int depth = 1 + callee->depth;
      std::vector<ExprPtr> args;
      if (check_punct("(")) args = arguments(depth);
      expr = finish(New{std::move(callee), std::move(args)}, pos, depth);
    } else {
      expr = primary();
    }
    while (true) {
      expr = member_chain(std::move(expr));
      if (!check_punct("(")) return expr;
      SourcePos pos = expr->pos;
      int depth = 1 + expr->depth;
      std::vector<ExprPtr> args = arguments(depth);
      if (auto* get = std::get_if<PropertyGet>(&expr->node)) {
        expr = finish(MethodCall{std::move(get->object), std::move(get->name),
                                 std::move(get->computed), std::move(args)},
                      pos, depth);
      } else {
        expr = finish(Call{std::move(expr), std::move(args)}, pos, depth);
      }
    }
  }

  ExprPtr primary() {
    if (at_end()) expected({"expression"});
    const Token& tok = toks_[cur_];
    SourcePos pos = tok.pos;
    switch (tok.kind) {
      case TokenKind::Number:
        ++cur_;
        return make_expr(NumberLit{parse_number(tok)}, pos);
      case TokenKind::String:
        ++cur_;
        return make_expr(StringLit{tok.text}, pos);
      case TokenKind::Identifier:
        ++cur_;
        return make_expr(Identifier{tok.lexeme}, pos);
      case TokenKind::Keyword:
        if (tok.lexeme == "true" || tok.lexeme == "false") {
          ++cur_;
          return make_expr(BoolLit{tok.lexeme == "true"}, pos);
        }
        if (tok.lexeme == "null") { ++cur_; return make_expr(NullLit{}, pos); }
        if (tok.lexeme == "undefined") { ++cur_; return make_expr(UndefinedLit{}, pos); }
        if (tok.lexeme == "this") { ++cur_; return make_expr(ThisExpr{}, pos); }
        if (tok.lexeme == "function") {
          ++cur_;
          Nest nest(*this);
          std::string name;
          if (peek() && peek()->kind == TokenKind::Identifier) name = peek()->lexeme, ++cur_;
          return make_expr(FunctionExpr{function_rest(pos, std::move(name))}, pos);
        }
        break;
      case TokenKind::Punctuator:
        if (tok.lexeme == "(") {
          ++cur_;
          ExprPtr inner = expression();
          expect_punct(")");
          return inner;
        }
        if (tok.lexeme == "{") return object_literal();
        break;
    }
    expected({"expression"});
  }

  ExprPtr object_literal() {
    Nest nest(*this);
    SourcePos pos = here();
    expect_punct("{");
    ObjectLit lit;
    int depth = 1;
    while (!check_punct("}")) {
      if (at_end()) expected({"}"});
      const Token& key = toks_[cur_];
      std::string name;
      switch (key.kind) {
        case TokenKind::Identifier:
        case TokenKind::Keyword: name = key.lexeme; break;
        case TokenKind::String: name = key.text; break;
        case TokenKind::Number: name = render_number(parse_number(key)); break;
        default: expected({"property name", "}"});
      }
      ++cur_;
      expect_punct(":");
      lit.properties.emplace_back(std::move(name), expression());
      depth = std::max(depth, 1 + lit.properties.back().second->depth);
      if (!match_punct(",")) break;
    }
    expect_punct("}");
    return finish(std::move(lit), pos, depth);
  }

  static double parse_number(const Token& tok) {
    double value = 0;
    const char* first = tok.lexeme.data();
    const char* last = first + tok.lexeme.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
      // Overflowing literals become infinity; underflowing ones zero.
      bool negative_exponent = tok.lexeme.find("e-") != std::string::npos ||
                               tok.lexeme.find("E-") != std::string::npos;
      return negative_exponent ? 0.0 : std::numeric_limits<double>::infinity();
    }
    if (ec != std::errc() || ptr != last) {
      throw ScriptError(ErrorKind::ParseError, "malformed number literal", tok.pos);
    }
    return value;
  }

  std::span<const Token> toks_;
  ParseOptions options_;
  std::size_t cur_ = 0;
  int function_depth_ = 0;
  SourcePos end_pos_;
  int nesting_ = 0;
};

}  // namespace

Program parse(std::span<const Token> tokens, ParseOptions options) {
  return Parser(tokens, options).program();
}

Program parse_source(std::string_view source, ParseOptions options) {
  auto tokens = tokenize(source);
  return parse(tokens, options);
}

}  // namespace proxylang
