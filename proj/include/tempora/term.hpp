#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tempora/affine.hpp"
#include "tempora/error.hpp"
#include "tempora/perm.hpp"

namespace tempora {

/// Morphism expression over one object A. Tensor and Seq are n-ary and kept
/// flat: a Tensor never has a Tensor part, a Seq never has a Seq part, and
/// both always have at least two parts. Seq parts are in diagram order
/// (first part applied first, drawn on top).
class Term {
 public:
  enum class Kind { Id, Gen, Braid, Box, Tensor, Seq };

  static Term id(std::size_t width) {
    if (width == 0) throw SemanticError("identity needs a positive width");
    Term t(Kind::Id);
    t.width_ = width;
    return t;
  }
  static Term gen(AffElem g) {
    Term t(Kind::Gen);
    t.gen_ = std::move(g);
    return t;
  }
  static Term braid() { return Term(Kind::Braid); }
  static Term box() { return Term(Kind::Box); }

  static Term tensor(std::vector<Term> parts) { return flat(Kind::Tensor, std::move(parts)); }
  static Term tensor(Term a, Term b) { return tensor(std::vector<Term>{std::move(a), std::move(b)}); }

  /// a then b.
  static Term seq(std::vector<Term> parts) { return flat(Kind::Seq, std::move(parts)); }
  static Term seq(Term a, Term b) { return seq(std::vector<Term>{std::move(a), std::move(b)}); }

  Kind kind() const { return kind_; }
  std::size_t width() const { return width_; }
  const AffElem& generator() const { return gen_; }
  const std::vector<Term>& parts() const { return parts_; }

  bool is_atom() const { return kind_ != Kind::Tensor && kind_ != Kind::Seq; }

  bool contains_box() const {
    if (kind_ == Kind::Box) return true;
    for (const auto& p : parts_)
      if (p.contains_box()) return true;
    return false;
  }

  friend bool operator==(const Term&, const Term&) = default;

 private:
  explicit Term(Kind k) : kind_(k) {}

  static Term flat(Kind k, std::vector<Term> parts) {
    std::vector<Term> out;
    for (auto& p : parts) {
      if (p.kind_ == k) {
        for (auto& q : p.parts_) out.push_back(std::move(q));
      } else {
        out.push_back(std::move(p));
      }
    }
    if (out.empty()) throw SemanticError("empty tensor or composition");
    if (out.size() == 1) return std::move(out.front());
    Term t(k);
    t.parts_ = std::move(out);
    return t;
  }

  Kind kind_;
  std::size_t width_ = 0;
  AffElem gen_;
  std::vector<Term> parts_;
};

/// Tensor-power widths of domain and codomain.
struct Arity {
  std::size_t dom = 0;
  std::size_t cod = 0;

  friend bool operator==(const Arity&, const Arity&) = default;
};

inline std::string to_string(const Arity& a) { return std::to_string(a.dom) + " -> " + std::to_string(a.cod); }

struct PrintStyle {
  bool unicode = false;
  // "g . f" (classical, right to left) instead of "f ; g" (diagram order).
  bool classical = false;
};

namespace detail {

inline void print_into(std::string& out, const Term& t, const PrintStyle& style, bool in_tensor) {
  switch (t.kind()) {
    case Term::Kind::Id:
      out += "id" + std::to_string(t.width());
      return;
    case Term::Kind::Gen:
      out += to_string(t.generator());
      return;
    case Term::Kind::Braid:
      out += style.unicode ? "\u03b3" : "braid";
      return;
    case Term::Kind::Box:
      out += style.unicode ? "\u25a1" : "box";
      return;
    case Term::Kind::Tensor: {
      const char* sep = style.unicode ? " \u2297 " : " (x) ";
      for (std::size_t i = 0; i < t.parts().size(); ++i) {
        if (i) out += sep;
        print_into(out, t.parts()[i], style, true);
      }
      return;
    }
    case Term::Kind::Seq: {
      if (in_tensor) out += '(';
      const auto& parts = t.parts();
      const std::size_t n = parts.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (i) out += style.classical ? (style.unicode ? " \u2218 " : " . ") : " ; ";
        print_into(out, parts[style.classical ? n - 1 - i : i], style, false);
      }
      if (in_tensor) out += ')';
      return;
    }
  }
}

}  // namespace detail

/// Grammar-conformant text; ASCII and diagram order by default.
inline std::string print_term(const Term& t, const PrintStyle& style = {}) {
  std::string out;
  detail::print_into(out, t, style, false);
  return out;
}

inline Arity typecheck(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Id:
      return {t.width(), t.width()};
    case Term::Kind::Gen:
      return {1, 1};
    case Term::Kind::Braid:
      return {2, 2};
    case Term::Kind::Box:
      return {2, 1};
    case Term::Kind::Tensor: {
      Arity a;
      for (const auto& p : t.parts()) {
        const auto pa = typecheck(p);
        a.dom += pa.dom;
        a.cod += pa.cod;
      }
      return a;
    }
    case Term::Kind::Seq: {
      Arity a = typecheck(t.parts().front());
      for (std::size_t i = 1; i < t.parts().size(); ++i) {
        const auto next = typecheck(t.parts()[i]);
        if (next.dom != a.cod) {
          throw ArityMismatch("cannot compose: '" + print_term(t.parts()[i - 1]) + "' has codomain width " +
                              std::to_string(a.cod) + " but '" + print_term(t.parts()[i]) + "' has domain width " +
                              std::to_string(next.dom));
        }
        a.cod = next.cod;
      }
      return a;
    }
  }
  throw InvariantBreach("unknown term kind");
}

/// Braiding of wires i and i+1 (1-based) among n.
inline Term sigma_i(std::size_t i, std::size_t n) {
  if (i < 1 || i >= n) {
    throw IndexOutOfRange("sigma_" + std::to_string(i) + " needs 1 <= i < n = " + std::to_string(n));
  }
  std::vector<Term> parts;
  if (i > 1) parts.push_back(Term::id(i - 1));
  parts.push_back(Term::braid());
  if (n - i - 1 > 0) parts.push_back(Term::id(n - i - 1));
  return Term::tensor(std::move(parts));
}

/// A permutation as a Box-free term: input wire j ends on output wire p(j).
inline Term perm_term(const Perm& p) {
  const std::size_t n = p.size();
  if (n == 0) throw SizeMismatch("empty permutation");
  // Bubble sort the target positions; each adjacent swap is one braid layer.
  std::vector<std::size_t> at(n);
  for (std::size_t j = 0; j < n; ++j) at[j] = p(j);
  std::vector<Term> layers;
  for (std::size_t pass = 0; pass < n; ++pass) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (at[i] > at[i + 1]) {
        std::swap(at[i], at[i + 1]);
        layers.push_back(sigma_i(i + 1, n));
      }
    }
  }
  if (layers.empty()) return Term::id(n);
  return Term::seq(std::move(layers));
}

}  // namespace tempora
