#pragma once

#include <string_view>

namespace proxylang {

/// Source of the library script loaded before user code: revocable
/// references, membranes and contract combinators.
std::string_view embedded_prelude();

}  // namespace proxylang
