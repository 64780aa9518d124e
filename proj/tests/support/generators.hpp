#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "tempora/tempora.hpp"

namespace tempora::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, bool positive = false) {
  static const long long dens[] = {1, 2, 3, 4, 5, 8, 16};
  const long long den = dens[uniform(rng, 0, std::size(dens) - 1)];
  const long long num = positive ? static_cast<long long>(uniform(rng, 1, 12))
                                 : static_cast<long long>(uniform(rng, 0, 24)) - 12;
  return make_rational(num, den);
}

inline AffElem random_aff(Rng& rng) { return {random_rational(rng), random_rational(rng, true)}; }

inline TimeSpan random_span(Rng& rng) { return {random_rational(rng), random_rational(rng, true)}; }

inline Perm random_perm(Rng& rng, std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  std::shuffle(v.begin(), v.end(), rng);
  return Perm(std::move(v));
}

inline WreathElem random_wreath(Rng& rng, std::size_t n) {
  std::vector<AffElem> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(random_aff(rng));
  return {std::move(comps), random_perm(rng, n)};
}

// Built entry by entry, not through psi_inv.
inline MatrixAffine random_matrix_affine(Rng& rng, std::size_t n) {
  MatrixAffine m{std::vector<Rational>(n), RationalMatrix(n, std::vector<Rational>(n, Rational(0)))};
  const auto p = random_perm(rng, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.offset[i] = random_rational(rng);
    m.matrix[p(i)][i] = random_rational(rng, true);
  }
  return m;
}

inline Term random_layer(Rng& rng, std::size_t dom, bool boxes) {
  std::vector<Term> atoms;
  std::size_t left = dom;
  while (left > 0) {
    const auto pick = uniform(rng, 0, 9);
    if (left >= 2 && pick >= 8 && boxes) {
      atoms.push_back(Term::box());
      left -= 2;
    } else if (left >= 2 && pick >= 5) {
      atoms.push_back(Term::braid());
      left -= 2;
    } else if (pick >= 2) {
      atoms.push_back(Term::gen(random_aff(rng)));
      left -= 1;
    } else {
      atoms.push_back(Term::id(1));
      left -= 1;
    }
  }
  return Term::tensor(std::move(atoms));
}

/// Random well-typed term with the given domain width and nesting depth at
/// most `depth`.
inline Term random_term(Rng& rng, std::size_t dom, int depth, bool boxes) {
  if (depth <= 0) return random_layer(rng, dom, boxes);
  switch (uniform(rng, 0, 3)) {
    case 0:
      return random_layer(rng, dom, boxes);
    case 1:
      if (dom >= 2) {
        const auto k = uniform(rng, 1, dom - 1);
        return Term::tensor(random_term(rng, k, depth - 1, boxes), random_term(rng, dom - k, depth - 1, boxes));
      }
      [[fallthrough]];
    default: {
      auto a = random_term(rng, dom, depth - 1, boxes);
      const auto mid = typecheck(a).cod;
      return Term::seq(std::move(a), random_term(rng, mid, depth - 1, boxes));
    }
  }
}

inline Term random_endo_term(Rng& rng, std::size_t n, int depth) { return random_term(rng, n, depth, false); }

// Shuffle and decorate up to n + extra wires, then bracket down to n.
inline Term random_bracket_term(Rng& rng, std::size_t n, std::size_t extra) {
  std::size_t w = n + uniform(rng, 1, extra);
  std::vector<Term> stages{random_endo_term(rng, w, 2)};
  while (w > n) {
    const auto at = uniform(rng, 0, w - 2);
    std::vector<Term> row;
    if (at) row.push_back(Term::id(at));
    row.push_back(Term::box());
    if (w - at - 2) row.push_back(Term::id(w - at - 2));
    stages.push_back(Term::tensor(std::move(row)));
    --w;
  }
  stages.push_back(random_endo_term(rng, n, 1));
  return Term::seq(std::move(stages));
}

}  // namespace tempora::testing
