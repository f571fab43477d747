#include "proxylang/errors.hpp"

#include <fmt/format.h>

namespace proxylang {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LexError: return "LexError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::TypeError: return "TypeError";
    case ErrorKind::ReferenceError: return "ReferenceError";
    case ErrorKind::RevokedProxyError: return "RevokedProxyError";
    case ErrorKind::ContractViolation: return "ContractViolation";
    case ErrorKind::StackOverflow: return "StackOverflow";
  }
  return "Error";
}

ScriptError::ScriptError(ErrorKind kind, std::string message,
                         std::optional<SourcePos> pos)
    : std::runtime_error(format(kind, message, pos)),
      kind_(kind),
      message_(std::move(message)),
      pos_(pos) {}

void ScriptError::set_pos(SourcePos pos) {
  pos_ = pos;
  static_cast<std::runtime_error&>(*this) =
      std::runtime_error(format(kind_, message_, pos_));
}

std::string ScriptError::diagnostic() const { return what(); }

std::string ScriptError::format(ErrorKind kind, const std::string& message,
                                const std::optional<SourcePos>& pos) {
  if (pos) {
    return fmt::format("{} at {}:{}: {}", to_string(kind), pos->line,
                       pos->column, message);
  }
  return fmt::format("{}: {}", to_string(kind), message);
}

void throw_error(ErrorKind kind, std::string message) {
  throw ScriptError(kind, std::move(message));
}

}  // namespace proxylang
