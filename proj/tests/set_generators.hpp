#pragma once

#include "euclid/numerosity.hpp"
#include "generators.hpp"

namespace euclid::testing {

inline sets::SetExpr random_atom(Rng& rng) {
  using sets::SetExpr;
  switch (uniform(rng, 0, 10)) {
    case 0: return SetExpr::empty();
    case 1: {
      std::vector<Integer> labels;
      for (long v = -3; v <= 9; ++v)
        if (uniform(rng, 0, 3) == 0) labels.emplace_back(v);
      return SetExpr::finite(std::move(labels));
    }
    case 2: return SetExpr::nplus();
    case 3: return SetExpr::naturals();
    case 4: return SetExpr::integers();
    case 5: return SetExpr::rationals();
    case 6: return SetExpr::q_interval(Rational(Integer(uniform(rng, -6, 6)), Integer(uniform(rng, 1, 3))));
    case 7: return SetExpr::multiples_of(uniform(rng, 1, 12));
    case 8: return SetExpr::kth_powers(uniform(rng, 1, 6));
    case 9: return SetExpr::pfin_nplus();
    default: return SetExpr::tagged(uniform(rng, 0, 1) == 0 ? "a" : "b");
  }
}

/// Atoms, unions that happen to be provably disjoint, and products.
inline sets::SetExpr random_set(Rng& rng, int depth) {
  using sets::SetExpr;
  if (depth == 0 || uniform(rng, 0, 2) == 0) return random_atom(rng);
  const SetExpr a = random_set(rng, depth - 1);
  switch (uniform(rng, 0, 2)) {
    case 0: {
      const SetExpr b = random_set(rng, depth - 1);
      if (sets::are_disjoint(a, b) == sets::Truth::yes)
        return SetExpr::disjoint_union(a, b);
      return a;
    }
    case 1: return SetExpr::product(a, random_set(rng, depth - 1));
    default: return SetExpr::product_singleton(a, uniform(rng, 0, 1) == 0 ? "a" : "b");
  }
}

}  // namespace euclid::testing
