#include "proxylang/printer.hpp"

#include <cmath>

#include <fmt/format.h>

#include "proxylang/value.hpp"

namespace proxylang {
namespace {

using namespace ast;

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string number_literal(double d) {
  if (std::isinf(d)) return "1e999";
  return render_number(d);
}

bool is_simple_callee(const Expr& e) {
  if (std::holds_alternative<Identifier>(e.node)) return true;
  if (auto* get = std::get_if<PropertyGet>(&e.node)) return is_simple_callee(*get->object);
  return false;
}

// Expressions that can be followed directly by `.name`, `[k]` or `(args)`.
bool is_postfix_safe(const Expr& e) {
  return std::visit(Overloaded{
                        [](const Identifier&) { return true; },
                        [](const ThisExpr&) { return true; },
                        [](const PropertyGet&) { return true; },
                        [](const Call&) { return true; },
                        [](const MethodCall&) { return true; },
                        [](const StringLit&) { return true; },
                        [](const auto&) { return false; },
                    },
                    e.node);
}

class Printer {
 public:
  std::string program(const Program& prog) {
    for (const auto& s : prog.statements) stmt(*s);
    return std::move(out_);
  }

 private:
  void line(std::string_view text) {
    out_.append(static_cast<std::size_t>(indent_) * 2, ' ');
    out_ += text;
    out_ += '\n';
  }

  void block(const Block& b, std::string_view head) {
    line(fmt::format("{}{{", head));
    ++indent_;
    for (const auto& s : b.body) stmt(*s);
    --indent_;
    line("}");
  }

  std::string function_head(const FunctionData& fn) {
    std::string params;
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      if (i) params += ", ";
      params += fn.params[i];
    }
    return fmt::format("function{}{}({}) ", fn.name.empty() ? "" : " ", fn.name, params);
  }

  void stmt(const Stmt& s) {
    std::visit(
        Overloaded{
            [&](const VarDecl& v) { line(fmt::format("var {} = {};", v.name, expr(*v.init))); },
            [&](const Assign& a) {
              line(fmt::format("{} = {};", expr(*a.target), expr(*a.value)));
            },
            [&](const ExprStmt& e) {
              bool ambiguous = std::holds_alternative<ObjectLit>(e.expr->node) ||
                               std::holds_alternative<FunctionExpr>(e.expr->node);
              std::string text = expr(*e.expr);
              line(ambiguous ? fmt::format("({});", text) : text + ";");
            },
            [&](const If& i) {
              std::string head = fmt::format("if ({}) ", expr(*i.test));
              if (!i.else_block) {
                block(i.then_block, head);
                return;
              }
              line(fmt::format("{}{{", head));
              ++indent_;
              for (const auto& inner : i.then_block.body) stmt(*inner);
              --indent_;
              line("} else {");
              ++indent_;
              for (const auto& inner : i.else_block->body) stmt(*inner);
              --indent_;
              line("}");
            },
            [&](const While& w) { block(w.body, fmt::format("while ({}) ", expr(*w.test))); },
            [&](const Return& r) {
              line(r.value ? fmt::format("return {};", expr(*r.value)) : "return;");
            },
            [&](const Block& b) { block(b, ""); },
            [&](const FunctionDecl& f) { function_body(*f.fn); },
        },
        s.node);
  }

  void function_body(const FunctionData& fn) {
    line(fmt::format("{}{{", function_head(fn)));
    ++indent_;
    for (const auto& s : fn.body) stmt(*s);
    --indent_;
    line("}");
  }

  std::string inline_function(const FunctionData& fn) {
    Printer inner;
    inner.indent_ = indent_ + 1;
    for (const auto& s : fn.body) inner.stmt(*s);
    std::string body = std::move(inner.out_);
    return fmt::format("{}{{\n{}{}}}", function_head(fn), body,
                       std::string(static_cast<std::size_t>(indent_) * 2, ' '));
  }

  std::string postfix_operand(const Expr& e) {
    std::string text = expr(e);
    return is_postfix_safe(e) ? text : fmt::format("({})", text);
  }

  std::string args(const std::vector<ExprPtr>& list) {
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i) out += ", ";
      out += expr(*list[i]);
    }
    return out;
  }

  std::string member(const Expr& object, const std::string& name, const ExprPtr& computed) {
    if (computed) return fmt::format("{}[{}]", postfix_operand(object), expr(*computed));
    return fmt::format("{}.{}", postfix_operand(object), name);
  }

  std::string expr(const Expr& e) {
    return std::visit(
        Overloaded{
            [&](const NumberLit& n) { return number_literal(n.value); },
            [&](const StringLit& s) { return quote(s.value); },
            [&](const BoolLit& b) { return std::string(b.value ? "true" : "false"); },
            [&](const NullLit&) { return std::string("null"); },
            [&](const UndefinedLit&) { return std::string("undefined"); },
            [&](const ThisExpr&) { return std::string("this"); },
            [&](const Identifier& i) { return i.name; },
            [&](const ObjectLit& o) {
              std::string out = "{";
              for (std::size_t i = 0; i < o.properties.size(); ++i) {
                if (i) out += ", ";
                out += fmt::format("{}: {}", quote(o.properties[i].first),
                                   expr(*o.properties[i].second));
              }
              return out + "}";
            },
            [&](const FunctionExpr& f) { return inline_function(*f.fn); },
            [&](const PropertyGet& g) { return member(*g.object, g.name, g.computed); },
            [&](const Call& c) {
              return fmt::format("{}({})", postfix_operand(*c.callee), args(c.args));
            },
            [&](const MethodCall& m) {
              return fmt::format("{}({})", member(*m.object, m.name, m.computed), args(m.args));
            },
            [&](const New& n) {
              std::string callee = expr(*n.callee);
              if (!is_simple_callee(*n.callee)) callee = fmt::format("({})", callee);
              return fmt::format("new {}({})", callee, args(n.args));
            },
            [&](const Binary& b) {
              return fmt::format("({} {} {})", expr(*b.lhs), to_string(b.op), expr(*b.rhs));
            },
            [&](const Unary& u) {
              return fmt::format("({}{})", to_string(u.op), expr(*u.operand));
            },
            [&](const Conditional& c) {
              return fmt::format("({} ? {} : {})", expr(*c.test), expr(*c.then_expr),
                                 expr(*c.else_expr));
            },
        },
        e.node);
  }

  std::string out_;
  int indent_ = 0;
};

class SexprDumper {
 public:
  std::string program(const Program& prog) {
    std::string out = "(program";
    for (const auto& s : prog.statements) out += " " + stmt(*s);
    return out + ")";
  }

 private:
  std::string list(const std::vector<StmtPtr>& body) {
    std::string out = "(";
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (i) out += " ";
      out += stmt(*body[i]);
    }
    return out + ")";
  }

  std::string function(const FunctionData& fn) {
    std::string params;
    for (const auto& p : fn.params) params += " " + p;
    return fmt::format("(function {} ({}) {})", quote(fn.name), params, list(fn.body));
  }

  std::string exprs(const std::vector<ExprPtr>& es) {
    std::string out;
    for (const auto& e : es) out += " " + expr(*e);
    return out;
  }

  std::string opt(const ExprPtr& e) { return e ? expr(*e) : "nil"; }

  std::string stmt(const Stmt& s) {
    return std::visit(
        Overloaded{
            [&](const VarDecl& v) { return fmt::format("(var {} {})", v.name, expr(*v.init)); },
            [&](const Assign& a) {
              return fmt::format("(assign {} {})", expr(*a.target), expr(*a.value));
            },
            [&](const ExprStmt& e) { return fmt::format("(expr {})", expr(*e.expr)); },
            [&](const If& i) {
              return fmt::format("(if {} {} {})", expr(*i.test), list(i.then_block.body),
                                 i.else_block ? list(i.else_block->body) : "nil");
            },
            [&](const While& w) {
              return fmt::format("(while {} {})", expr(*w.test), list(w.body.body));
            },
            [&](const Return& r) { return fmt::format("(return {})", opt(r.value)); },
            [&](const Block& b) { return fmt::format("(block {})", list(b.body)); },
            [&](const FunctionDecl& f) { return fmt::format("(decl {})", function(*f.fn)); },
        },
        s.node);
  }

  std::string expr(const Expr& e) {
    return std::visit(
        Overloaded{
            [&](const NumberLit& n) { return fmt::format("(num {})", number_literal(n.value)); },
            [&](const StringLit& s) { return fmt::format("(str {})", quote(s.value)); },
            [&](const BoolLit& b) { return std::string(b.value ? "true" : "false"); },
            [&](const NullLit&) { return std::string("null"); },
            [&](const UndefinedLit&) { return std::string("undefined"); },
            [&](const ThisExpr&) { return std::string("this"); },
            [&](const Identifier& i) { return fmt::format("(id {})", i.name); },
            [&](const ObjectLit& o) {
              std::string out = "(object";
              for (const auto& [k, v] : o.properties) {
                out += fmt::format(" ({} {})", quote(k), expr(*v));
              }
              return out + ")";
            },
            [&](const FunctionExpr& f) { return function(*f.fn); },
            [&](const PropertyGet& g) {
              return g.computed ? fmt::format("(index {} {})", expr(*g.object), expr(*g.computed))
                                : fmt::format("(get {} {})", expr(*g.object), g.name);
            },
            [&](const Call& c) { return fmt::format("(call {}{})", expr(*c.callee), exprs(c.args)); },
            [&](const MethodCall& m) {
              return m.computed ? fmt::format("(invoke-index {} {}{})", expr(*m.object),
                                              expr(*m.computed), exprs(m.args))
                                : fmt::format("(invoke {} {}{})", expr(*m.object), m.name,
                                              exprs(m.args));
            },
            [&](const New& n) { return fmt::format("(new {}{})", expr(*n.callee), exprs(n.args)); },
            [&](const Binary& b) {
              return fmt::format("({} {} {})", to_string(b.op), expr(*b.lhs), expr(*b.rhs));
            },
            [&](const Unary& u) {
              return fmt::format("(unary{} {})", to_string(u.op), expr(*u.operand));
            },
            [&](const Conditional& c) {
              return fmt::format("(cond {} {} {})", expr(*c.test), expr(*c.then_expr),
                                 expr(*c.else_expr));
            },
        },
        e.node);
  }
};

}  // namespace

std::string pretty_print(const Program& program) { return Printer().program(program); }

std::string to_sexpr(const Program& program) { return SexprDumper().program(program); }

}  // namespace proxylang
