#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "euclid/number.hpp"
#include "euclid/series.hpp"

namespace euclid {

// Canonical text rendering. Terms appear in strictly decreasing exponent
// order, coefficient first: "2·α^2 + 1", "1/3 − (1/2)·η + (1/6)·η^2".
// Negative α powers print as η powers and 2^α powers print as "2^α",
// "(2^α)^2", "(2^α)^(-1)". A proper fraction prints as "(num)/(den)".
// Every rendering parses back to the same number.

/// Product of the atoms of x^e, e.g. "2^α·α^(1/2)"; empty for (0,0).
std::string atoms_text(const Exponent& e);
std::string to_text(const SeriesPoly& p);

/// Signed sum of coefficient·atoms terms in the given order, rendered like
/// series terms. An empty atoms string marks a constant term.
std::string linear_text(const std::vector<std::pair<Rational, std::string>>& terms);
std::string to_text(const EuclideanNumber& x);

/// [e2a, ea, coefficient] triples, every rational as "p/q".
std::vector<std::array<std::string, 3>> term_triples(const SeriesPoly& p);

}  // namespace euclid
