#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace proxylang {

/// 1-based position in a source text.
struct SourcePos {
  int line = 1;
  int column = 1;

  bool operator==(const SourcePos&) const = default;
};

enum class ErrorKind {
  LexError,
  ParseError,
  TypeError,
  ReferenceError,
  RevokedProxyError,
  ContractViolation,
  StackOverflow,
};

std::string_view to_string(ErrorKind kind);

/// Every failure a script can trigger. Errors raised deep inside the object
/// engine carry no position; the evaluator stamps the position of the
/// innermost expression that was executing when the error surfaced.
class ScriptError : public std::runtime_error {
 public:
  ScriptError(ErrorKind kind, std::string message,
              std::optional<SourcePos> pos = std::nullopt);

  ErrorKind kind() const { return kind_; }
  const std::string& message() const { return message_; }
  const std::optional<SourcePos>& pos() const { return pos_; }
  void set_pos(SourcePos pos);

  /// "<Kind> at <line>:<column>: <message>"
  std::string diagnostic() const;

 private:
  static std::string format(ErrorKind kind, const std::string& message,
                            const std::optional<SourcePos>& pos);

  ErrorKind kind_;
  std::string message_;
  std::optional<SourcePos> pos_;
};

[[noreturn]] void throw_error(ErrorKind kind, std::string message);

}  // namespace proxylang
