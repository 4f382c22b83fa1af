#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace euclid::cli {

struct Token {
  enum class Type { end, number, ident, sym };
  Type type;
  /// Unicode aliases are mapped to their ASCII spelling: α → alpha,
  /// − → -, · → *, ⊔ → (+).
  std::string text;
  std::size_t column;
};

/// Throws SyntaxError on a character outside the language.
std::vector<Token> tokenize(std::string_view line);

}  // namespace euclid::cli
