#include "euclid/render.hpp"

namespace euclid {

namespace {

constexpr const char* kMinus = "−";
constexpr const char* kDot = "·";

std::string power_suffix(const Rational& k) {
  if (k == 1) return "";
  if (k.is_integer() && k.sign() > 0) return "^" + k.str();
  return "^(" + k.str() + ")";
}

}  // namespace

std::string atoms_text(const Exponent& e) {
  std::string out;
  if (!e.e2a.is_zero()) {
    out = e.e2a == 1 ? "2^α" : "(2^α)" + power_suffix(e.e2a);
  }
  if (!e.ea.is_zero()) {
    if (!out.empty()) out += kDot;
    if (e.ea.sign() > 0)
      out += "α" + power_suffix(e.ea);
    else
      out += "η" + power_suffix(-e.ea);
  }
  return out;
}

std::string linear_text(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, atoms] : terms) {
    const bool negative = c.sign() < 0;
    if (first)
      out += negative ? kMinus : "";
    else
      out += negative ? std::string(" ") + kMinus + " " : " + ";
    first = false;
    const Rational mag = c.abs();
    if (atoms.empty())
      out += mag.str();
    else if (mag == 1)
      out += atoms;
    else if (mag.is_integer())
      out += mag.str() + kDot + atoms;
    else
      out += "(" + mag.str() + ")" + kDot + atoms;
  }
  return out;
}

std::string to_text(const SeriesPoly& p) {
  std::vector<std::pair<Rational, std::string>> terms;
  terms.reserve(p.size());
  for (const auto& [e, c] : p.terms()) terms.emplace_back(c, atoms_text(e));
  return linear_text(terms);
}

std::string to_text(const EuclideanNumber& x) {
  if (x.is_series()) return to_text(x.numerator());
  return "(" + to_text(x.numerator()) + ")/(" + to_text(x.denominator()) + ")";
}

std::vector<std::array<std::string, 3>> term_triples(const SeriesPoly& p) {
  std::vector<std::array<std::string, 3>> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms())
    out.push_back({e.e2a.fraction_str(), e.ea.fraction_str(), c.fraction_str()});
  return out;
}

}  // namespace euclid
