#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tempora/affine.hpp"
#include "tempora/diagram.hpp"
#include "tempora/error.hpp"
#include "tempora/perm.hpp"
#include "tempora/term.hpp"
#include "tempora/wreath.hpp"

namespace tempora {

/// Undecorated binary tree shape: a leaf has no children, a node exactly two.
struct Shape {
  std::vector<Shape> children;

  static Shape leaf() { return {}; }
  static Shape node(Shape left, Shape right) { return {{std::move(left), std::move(right)}}; }

  bool is_leaf() const { return children.empty(); }

  std::size_t leaf_count() const {
    if (is_leaf()) return 1;
    return children[0].leaf_count() + children[1].leaf_count();
  }

  friend bool operator==(const Shape&, const Shape&) = default;
};

inline std::string to_string(const Shape& s) {
  if (s.is_leaf()) return "*";
  return "(" + to_string(s.children[0]) + " " + to_string(s.children[1]) + ")";
}

/// Canonical form of a morphism A^m -> A^n: the inputs are permuted onto
/// the m leaves (input j lands on leaf input_perm(j)), each leaf is
/// decorated by a group element, and the leaves are bracketed left to right
/// into n binary trees.
struct BracketNormal {
  Perm input_perm;
  std::vector<AffElem> leaves;
  std::vector<Shape> forest;

  std::size_t dom() const { return leaves.size(); }
  std::size_t cod() const { return forest.size(); }

  friend bool operator==(const BracketNormal&, const BracketNormal&) = default;
};

/// Box-free endomorphism (g_1 (x) ... (x) g_n) o sigma.
struct EndoNormal {
  WreathElem wreath;

  friend bool operator==(const EndoNormal&, const EndoNormal&) = default;
};

inline std::string to_string(const BracketNormal& nf) {
  std::string s = "perm " + to_string(nf.input_perm) + " | leaves";
  for (const auto& g : nf.leaves) s += " " + to_string(g);
  s += " | forest";
  for (const auto& t : nf.forest) s += " " + to_string(t);
  return s;
}

inline std::string to_string(const EndoNormal& nf) { return to_string(nf.wreath); }

/// Rewrite rules. The R1 variant exists so the relation checker can be
/// shown to catch a wrong rule.
struct RuleTable {
  enum class R1 { AllLeaves, LeftLeafOnly };
  R1 r1 = R1::AllLeaves;
};

enum class Strategy { TopDown, BottomUp, Random };

struct NormalizeOptions {
  Strategy strategy = Strategy::TopDown;
  std::uint64_t seed = 0;
  RuleTable rules{};
  std::size_t max_steps = 1'000'000;
};

namespace detail {

// Sort key along the wires, smallest nearest the inputs.
inline int rank(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::Braid: return 0;
    case Atom::Kind::Gen: return 1;
    case Atom::Kind::Box: return 2;
    case Atom::Kind::Wire: return 3;
  }
  return 3;
}

inline bool overlaps(const Slice& above, const Slice& below) {
  const auto a0 = above.pos, a1 = above.pos + above.atom.cod();
  const auto b0 = below.pos, b1 = below.pos + below.atom.dom();
  return a0 < b1 && b0 < a1;
}

/// Replacement for the adjacent pair (above, below), if a rule applies.
inline std::optional<std::vector<Slice>> rewrite_pair(const Slice& above, const Slice& below, const RuleTable& rules) {
  using K = Atom::Kind;
  const auto& A = above.atom;
  const auto& B = below.atom;
  const auto a = above.pos;
  const auto b = below.pos;

  if (!overlaps(above, below)) {
    if (rank(B) >= rank(A)) return std::nullopt;
    // Interchange: slide `below` above `above`.
    if (b >= a + A.cod()) {
      return std::vector<Slice>{{b - A.cod() + A.dom(), B}, {a, A}};
    }
    return std::vector<Slice>{{b, B}, {a - B.dom() + B.cod(), A}};
  }

  if (A.kind == K::Gen && B.kind == K::Gen) {
    return std::vector<Slice>{{a, gen_atom(B.gen * A.gen)}};
  }
  if (A.kind == K::Braid && B.kind == K::Braid && a == b) {
    return std::vector<Slice>{};
  }
  if (A.kind == K::Gen && B.kind == K::Braid) {
    // Naturality of the braiding: the generator follows its wire.
    return std::vector<Slice>{{b, B}, {a == b ? a + 1 : a - 1, A}};
  }
  if (A.kind == K::Box && B.kind == K::Gen) {
    // R1: h o box = box o (h (x) h)
    if (rules.r1 == RuleTable::R1::LeftLeafOnly) {
      return std::vector<Slice>{{a, B}, {a, A}};
    }
    return std::vector<Slice>{{a, B}, {a + 1, B}, {a, A}};
  }
  if (A.kind == K::Box && B.kind == K::Braid) {
    if (b == a) {
      // R3: braid o (box (x) id) = (id (x) box) o (braid (x) id) o (id (x) braid)
      return std::vector<Slice>{{a + 1, braid_atom()}, {a, braid_atom()}, {a + 1, box_atom()}};
    }
    // R2: braid o (id (x) box) = (box (x) id) o (id (x) braid) o (braid (x) id)
    return std::vector<Slice>{{b, braid_atom()}, {b + 1, braid_atom()}, {b, box_atom()}};
  }
  return std::nullopt;
}

inline bool is_sorted_by_rank(const SlicedDiagram& d) {
  for (std::size_t k = 1; k < d.slices.size(); ++k)
    if (rank(d.slices[k].atom) < rank(d.slices[k - 1].atom)) return false;
  return true;
}

}  // namespace detail

/// Rewrites until the slices are sorted by rank. Each step rewrites one
/// adjacent pair chosen by the strategy.
inline SlicedDiagram rewrite_to_normal(SlicedDiagram d, const NormalizeOptions& opts = {}) {
  std::mt19937_64 rng(opts.seed);
  for (std::size_t step = 0;; ++step) {
    if (step > opts.max_steps) throw InvariantBreach("rewriting did not terminate within the step bound");
    std::vector<std::size_t> redexes;
    for (std::size_t k = 0; k + 1 < d.slices.size(); ++k) {
      if (detail::rewrite_pair(d.slices[k], d.slices[k + 1], opts.rules)) {
        redexes.push_back(k);
        if (opts.strategy == Strategy::TopDown) break;
      }
    }
    if (redexes.empty()) break;
    std::size_t k = 0;
    switch (opts.strategy) {
      case Strategy::TopDown: k = redexes.front(); break;
      case Strategy::BottomUp: k = redexes.back(); break;
      case Strategy::Random:
        k = redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng)];
        break;
    }
    auto replacement = *detail::rewrite_pair(d.slices[k], d.slices[k + 1], opts.rules);
    d.slices.erase(d.slices.begin() + static_cast<std::ptrdiff_t>(k),
                   d.slices.begin() + static_cast<std::ptrdiff_t>(k + 2));
    d.slices.insert(d.slices.begin() + static_cast<std::ptrdiff_t>(k), replacement.begin(), replacement.end());
  }
  return d;
}

/// Reads the normal form off a rank-sorted diagram.
inline BracketNormal read_normal(const SlicedDiagram& d) {
  if (!detail::is_sorted_by_rank(d)) throw InvariantBreach("diagram is not in rank order");
  const std::size_t m = d.dom;
  std::vector<std::size_t> at(m);
  for (std::size_t i = 0; i < m; ++i) at[i] = i;
  std::vector<AffElem> leaves(m);
  std::vector<Shape> forest(m);
  for (const auto& s : d.slices) {
    switch (s.atom.kind) {
      case Atom::Kind::Braid:
        std::swap(at.at(s.pos), at.at(s.pos + 1));
        break;
      case Atom::Kind::Gen:
        leaves.at(s.pos) = s.atom.gen * leaves.at(s.pos);
        break;
      case Atom::Kind::Box: {
        auto joined = Shape::node(std::move(forest.at(s.pos)), std::move(forest.at(s.pos + 1)));
        forest[s.pos] = std::move(joined);
        forest.erase(forest.begin() + static_cast<std::ptrdiff_t>(s.pos + 1));
        break;
      }
      case Atom::Kind::Wire:
        break;
    }
  }
  std::vector<std::size_t> images(m);
  for (std::size_t k = 0; k < m; ++k) images[at[k]] = k;
  return {Perm(std::move(images)), std::move(leaves), std::move(forest)};
}

inline BracketNormal normalize_bracket(const Term& t, const NormalizeOptions& opts = {}) {
  typecheck(t);
  return read_normal(rewrite_to_normal(slices_of(t), opts));
}

inline EndoNormal normalize_endo(const Term& t, const NormalizeOptions& opts = {}) {
  const auto ar = typecheck(t);
  if (ar.dom != ar.cod) throw NotEndo("term " + to_string(ar) + " is not an endomorphism");
  if (t.contains_box()) throw BoxPresent("term contains a bracket; use the bracket normal form");
  auto nf = normalize_bracket(t, opts);
  return {WreathElem(std::move(nf.leaves), std::move(nf.input_perm))};
}

/// A bracket normal form with no brackets, viewed as a wreath element.
inline std::optional<EndoNormal> as_endo(const BracketNormal& nf) {
  if (nf.dom() != nf.cod()) return std::nullopt;
  return EndoNormal{WreathElem(nf.leaves, nf.input_perm)};
}

inline BracketNormal as_bracket(const EndoNormal& e) {
  return {e.wreath.perm(), e.wreath.components(), std::vector<Shape>(e.wreath.size())};
}

inline bool terms_equal(const Term& a, const Term& b, const NormalizeOptions& opts = {}) {
  const auto aa = typecheck(a);
  const auto ab = typecheck(b);
  if (aa != ab) throw ArityMismatch("cannot compare terms of arity " + to_string(aa) + " and " + to_string(ab));
  return normalize_bracket(a, opts) == normalize_bracket(b, opts);
}

namespace detail {

inline Term shape_term(const Shape& s) {
  if (s.is_leaf()) return Term::id(1);
  return Term::seq(Term::tensor(shape_term(s.children[0]), shape_term(s.children[1])), Term::box());
}

inline void leaf_paths(const Shape& s, std::vector<std::size_t>& prefix, std::vector<std::vector<std::size_t>>& out) {
  if (s.is_leaf()) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t c = 0; c < 2; ++c) {
    prefix.push_back(c);
    leaf_paths(s.children[c], prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// A term whose normal form is `nf`: permutation, then decorations, then brackets.
inline Term to_term(const BracketNormal& nf) {
  std::vector<Term> stages;
  if (!nf.input_perm.is_identity()) stages.push_back(perm_term(nf.input_perm));
  bool decorated = false;
  std::vector<Term> gens;
  for (const auto& g : nf.leaves) {
    decorated = decorated || !g.is_identity();
    gens.push_back(g.is_identity() ? Term::id(1) : Term::gen(g));
  }
  if (decorated) stages.push_back(Term::tensor(std::move(gens)));
  bool bracketed = false;
  std::vector<Term> trees;
  for (const auto& s : nf.forest) {
    bracketed = bracketed || !s.is_leaf();
    trees.push_back(detail::shape_term(s));
  }
  if (bracketed) stages.push_back(Term::tensor(std::move(trees)));
  if (stages.empty()) return Term::id(nf.dom());
  return Term::seq(std::move(stages));
}

inline Term to_term(const EndoNormal& e) { return to_term(as_bracket(e)); }

/// Group element on leaf k (1-based, left to right).
inline const AffElem& leaf_decoration(const BracketNormal& nf, std::size_t k) {
  if (k < 1 || k > nf.leaves.size()) {
    throw IndexOutOfRange("leaf " + std::to_string(k) + " out of range 1.." + std::to_string(nf.leaves.size()));
  }
  return nf.leaves[k - 1];
}

/// Tree (1-based) owning leaf k (1-based).
inline std::size_t tree_of_leaf(const BracketNormal& nf, std::size_t k) {
  if (k < 1 || k > nf.leaves.size()) {
    throw IndexOutOfRange("leaf " + std::to_string(k) + " out of range 1.." + std::to_string(nf.leaves.size()));
  }
  std::size_t seen = 0;
  for (std::size_t j = 0; j < nf.forest.size(); ++j) {
    seen += nf.forest[j].leaf_count();
    if (k <= seen) return j + 1;
  }
  throw InvariantBreach("forest has fewer leaves than decorations");
}

/// Child directions (0 left, 1 right) from the root of each tree to each
/// of its leaves, in left-to-right order.
inline std::vector<std::vector<std::size_t>> leaf_paths(const Shape& s) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> prefix;
  detail::leaf_paths(s, prefix, out);
  return out;
}

/// Inverse of leaf_paths; throws CorruptInput if the paths are not the
/// complete leaf set of one binary tree in left-to-right order.
inline Shape shape_from_paths(const std::vector<std::vector<std::size_t>>& paths) {
  struct Builder {
    const std::vector<std::vector<std::size_t>>& paths;
    std::size_t next = 0;

    Shape build(std::vector<std::size_t>& prefix) {
      if (next >= paths.size()) throw CorruptInput("leaf paths do not form a complete binary tree");
      const auto& p = paths[next];
      if (p.size() < prefix.size() || !std::equal(prefix.begin(), prefix.end(), p.begin())) {
        throw CorruptInput("leaf paths do not form a complete binary tree");
      }
      if (p.size() == prefix.size()) {
        ++next;
        return Shape::leaf();
      }
      if (p[prefix.size()] != 0) throw CorruptInput("leaf paths are not in left-to-right order");
      prefix.push_back(0);
      auto left = build(prefix);
      prefix.back() = 1;
      auto right = build(prefix);
      prefix.pop_back();
      return Shape::node(std::move(left), std::move(right));
    }
  };
  Builder b{paths};
  std::vector<std::size_t> prefix;
  auto s = b.build(prefix);
  if (b.next != paths.size()) throw CorruptInput("leaf paths do not form a single tree");
  return s;
}

}  // namespace tempora
