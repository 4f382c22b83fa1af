#include "lexer.hpp"

#include <array>
#include <cctype>
#include <utility>

#include "euclid/cli.hpp"

namespace euclid::cli {

namespace {

struct Alias {
  std::string_view utf8;
  Token::Type type;
  std::string_view text;
  /// Second token emitted after the first, e.g. ℕ⁺ → N +.
  std::string_view extra = {};
  Token::Type extra_type = Token::Type::sym;
};

constexpr std::array kAliases{
    Alias{"α", Token::Type::ident, "alpha"},
    Alias{"η", Token::Type::ident, "eta"},
    Alias{"ω", Token::Type::ident, "omega"},
    Alias{"π", Token::Type::ident, "pi"},
    Alias{"√", Token::Type::ident, "sqrt"},
    Alias{"ℕ⁺", Token::Type::ident, "N", "+"},
    Alias{"ℕ", Token::Type::ident, "N"},
    Alias{"ℤ", Token::Type::ident, "Z"},
    Alias{"ℚ", Token::Type::ident, "Q"},
    Alias{"∅", Token::Type::ident, "empty"},
    Alias{"−", Token::Type::sym, "-"},
    Alias{"·", Token::Type::sym, "*"},
    Alias{"⊗", Token::Type::sym, "*"},
    Alias{"⊕", Token::Type::sym, "+"},
    Alias{"×", Token::Type::sym, "×"},
    Alias{"⊔", Token::Type::sym, "(+)"},
    Alias{"⊎", Token::Type::sym, "(+)"},
    Alias{"²", Token::Type::sym, "^", "2", Token::Type::number},
    Alias{"³", Token::Type::sym, "^", "3", Token::Type::number},
};

constexpr std::string_view kSingle = "+-*/^()[]{},=";

bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

std::size_t code_points(std::string_view s) {
  std::size_t n = 0;
  for (const unsigned char c : s)
    if (!is_continuation(c)) ++n;
  return n;
}

}  // namespace

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t column = 1;
  const auto advance = [&](std::size_t bytes) {
    column += code_points(line.substr(i, bytes));
    i += bytes;
  };

  while (i < line.size()) {
    const unsigned char c = static_cast<unsigned char>(line[i]);
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j + 1 < line.size() && line[j] == '.' && std::isdigit(static_cast<unsigned char>(line[j + 1]))) {
        ++j;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      }
      out.push_back({Token::Type::number, std::string(line.substr(i, j - i)), column});
      advance(j - i);
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
      out.push_back({Token::Type::ident, std::string(line.substr(i, j - i)), column});
      advance(j - i);
      continue;
    }
    if (line.substr(i, 3) == "(+)") {
      out.push_back({Token::Type::sym, "(+)", column});
      advance(3);
      continue;
    }
    if (kSingle.find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Type::sym, std::string(1, static_cast<char>(c)), column});
      advance(1);
      continue;
    }
    bool matched = false;
    for (const Alias& a : kAliases) {
      if (line.substr(i, a.utf8.size()) != a.utf8) continue;
      out.push_back({a.type, std::string(a.text), column});
      if (!a.extra.empty()) out.push_back({a.extra_type, std::string(a.extra), column});
      advance(a.utf8.size());
      matched = true;
      break;
    }
    if (matched) continue;
    std::size_t len = 1;
    while (i + len < line.size() && is_continuation(static_cast<unsigned char>(line[i + len]))) ++len;
    throw SyntaxError(column, "a number, name or operator", std::string(line.substr(i, len)));
  }
  out.push_back({Token::Type::end, "", column});
  return out;
}

}  // namespace euclid::cli
