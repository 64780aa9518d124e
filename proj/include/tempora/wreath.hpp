#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tempora/affine.hpp"
#include "tempora/error.hpp"
#include "tempora/perm.hpp"
#include "tempora/rational.hpp"

namespace tempora {

/// Element of Aff+ wr S_n: one affine component per timeline and a
/// permutation of the timelines.
class WreathElem {
 public:
  WreathElem(std::vector<AffElem> components, Perm perm)
      : components_(std::move(components)), perm_(std::move(perm)) {
    if (components_.empty()) throw SizeMismatch("wreath element needs at least one component");
    if (components_.size() != perm_.size()) {
      throw SizeMismatch("wreath element has " + std::to_string(components_.size()) +
                         " components but a permutation of size " + std::to_string(perm_.size()));
    }
  }

  static WreathElem identity(std::size_t n) { return {std::vector<AffElem>(n), Perm::identity(n)}; }

  std::size_t size() const { return components_.size(); }
  const std::vector<AffElem>& components() const { return components_; }
  const AffElem& component(std::size_t i) const { return components_.at(i); }
  const Perm& perm() const { return perm_; }

  bool is_identity() const {
    for (const auto& c : components_)
      if (!c.is_identity()) return false;
    return perm_.is_identity();
  }

  friend bool operator==(const WreathElem&, const WreathElem&) = default;

 private:
  std::vector<AffElem> components_;
  Perm perm_;
};

/// x * y: components x_i * (x.perm . y.components)_i, permutation x.perm o y.perm.
inline WreathElem wreath_mul(const WreathElem& x, const WreathElem& y) {
  if (x.size() != y.size()) {
    throw SizeMismatch("wreath sizes differ: " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
  const auto moved = perm_apply(x.perm(), y.components());
  std::vector<AffElem> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x.component(i) * moved[i]);
  return {std::move(out), x.perm() * y.perm()};
}

inline WreathElem operator*(const WreathElem& x, const WreathElem& y) { return wreath_mul(x, y); }

inline WreathElem wreath_inv(const WreathElem& x) {
  const auto inv_perm = x.perm().inverse();
  std::vector<AffElem> inv_components;
  inv_components.reserve(x.size());
  for (const auto& c : x.components()) inv_components.push_back(aff_inv(c));
  return {perm_apply(inv_perm, inv_components), inv_perm};
}

/// Juxtaposition of timelines: x on the first timelines, y after them.
inline WreathElem wreath_direct_sum(const WreathElem& x, const WreathElem& y) {
  auto comps = x.components();
  comps.insert(comps.end(), y.components().begin(), y.components().end());
  return {std::move(comps), perm_direct_sum(x.perm(), y.perm())};
}

inline std::string to_string(const WreathElem& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += to_string(w.component(i));
  }
  return s + "; " + to_string(w.perm()) + ")";
}

using RationalMatrix = std::vector<std::vector<Rational>>;

inline RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline void require_square(const RationalMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw SizeMismatch("matrix is not square");
}

/// Factorization m = diag(diagonal) . P(perm) of a monomial matrix with
/// positive entries.
struct MonomialFactors {
  std::vector<Rational> diagonal;
  Perm perm;
};

inline MonomialFactors decompose_U(const RationalMatrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  std::vector<Rational> diagonal(n);
  std::vector<std::size_t> images(n, n);
  std::vector<bool> column_used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t hit = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] == 0) continue;
      if (m[i][j] < 0) {
        throw NotInSubgroup("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is negative");
      }
      if (hit != n) throw NotInSubgroup("row " + std::to_string(i + 1) + " has more than one nonzero entry");
      hit = j;
    }
    if (hit == n) throw NotInSubgroup("row " + std::to_string(i + 1) + " is zero");
    if (column_used[hit]) throw NotInSubgroup("column " + std::to_string(hit + 1) + " has more than one nonzero entry");
    column_used[hit] = true;
    // P(i, hit) = 1 iff i = perm(hit)
    images[hit] = i;
    diagonal[i] = m[i][hit];
  }
  return {std::move(diagonal), Perm(std::move(images))};
}

inline bool in_U(const RationalMatrix& m) {
  try {
    decompose_U(m);
    return true;
  } catch (const NotInSubgroup&) {
    return false;
  } catch (const SizeMismatch&) {
    return false;
  }
}

/// Row sums. Defined for any square matrix so other candidate subgroups can
/// be checked for positive generalized durations.
inline std::vector<Rational> row_sums(const RationalMatrix& m) {
  std::vector<Rational> sums;
  sums.reserve(m.size());
  for (const auto& row : m) {
    Rational s = 0;
    for (const auto& x : row) s += x;
    sums.push_back(std::move(s));
  }
  return sums;
}

inline bool has_positive_row_sums(const RationalMatrix& m) {
  for (const auto& s : row_sums(m))
    if (s <= 0) return false;
  return true;
}

/// Element (offset, matrix) of R^n x| U_n, acting on onsets and durations.
struct MatrixAffine {
  std::vector<Rational> offset;
  RationalMatrix matrix;

  static MatrixAffine identity(std::size_t n) { return {std::vector<Rational>(n, Rational(0)), identity_matrix(n)}; }

  std::size_t size() const { return offset.size(); }

  friend bool operator==(const MatrixAffine&, const MatrixAffine&) = default;
};

inline std::vector<Rational> durations_of(const MatrixAffine& m) { return row_sums(m.matrix); }

namespace detail {

inline void check_matrix_affine(const MatrixAffine& x) {
  require_square(x.matrix);
  if (x.offset.size() != x.matrix.size()) throw SizeMismatch("offset length does not match matrix size");
}

}  // namespace detail

/// (o1 + M1 o2, M1 M2). Both operands must lie in U_n.
inline MatrixAffine matrix_mul(const MatrixAffine& x, const MatrixAffine& y) {
  detail::check_matrix_affine(x);
  detail::check_matrix_affine(y);
  if (x.size() != y.size()) throw SizeMismatch("matrix sizes differ");
  decompose_U(x.matrix);
  decompose_U(y.matrix);
  const std::size_t n = x.size();
  MatrixAffine out{x.offset, RationalMatrix(n, std::vector<Rational>(n, Rational(0)))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (x.matrix[i][k] == 0) continue;
      out.offset[i] += x.matrix[i][k] * y.offset[k];
      for (std::size_t j = 0; j < n; ++j) out.matrix[i][j] += x.matrix[i][k] * y.matrix[k][j];
    }
  }
  return out;
}

/// (-M^-1 o, M^-1). For a monomial matrix the inverse is the transpose with
/// reciprocal entries.
inline MatrixAffine matrix_inverse(const MatrixAffine& x) {
  detail::check_matrix_affine(x);
  decompose_U(x.matrix);
  const std::size_t n = x.size();
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (x.matrix[i][j] != 0) inv[j][i] = 1 / x.matrix[i][j];
  std::vector<Rational> offset(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) offset[i] -= inv[i][k] * x.offset[k];
  return {std::move(offset), std::move(inv)};
}

inline WreathElem psi(const MatrixAffine& x) {
  detail::check_matrix_affine(x);
  auto [diagonal, perm] = decompose_U(x.matrix);
  std::vector<AffElem> comps;
  comps.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) comps.emplace_back(x.offset[i], diagonal[i]);
  return {std::move(comps), std::move(perm)};
}

inline MatrixAffine psi_inv(const WreathElem& w) {
  const std::size_t n = w.size();
  MatrixAffine out{std::vector<Rational>(n), RationalMatrix(n, std::vector<Rational>(n, Rational(0)))};
  for (std::size_t i = 0; i < n; ++i) out.offset[i] = w.component(i).t();
  for (std::size_t j = 0; j < n; ++j) {
    const auto i = w.perm()(j);
    out.matrix[i][j] = w.component(i).d();
  }
  return out;
}

/// n time-spans, one per timeline, plus the exchange permutation recording
/// how the timelines were interchanged to reach them. Read through the
/// canonical bijection this is exactly a wreath element.
class SpanConfig {
 public:
  explicit SpanConfig(std::vector<TimeSpan> spans)
      : spans_(std::move(spans)), exchange_(Perm::identity(spans_.size())) {}
  SpanConfig(std::vector<TimeSpan> spans, Perm exchange) : spans_(std::move(spans)), exchange_(std::move(exchange)) {
    if (spans_.size() != exchange_.size()) throw SizeMismatch("span count does not match exchange permutation size");
  }

  static SpanConfig from_wreath(const WreathElem& w) {
    std::vector<TimeSpan> spans;
    spans.reserve(w.size());
    for (const auto& c : w.components()) spans.push_back(chi(c));
    return {std::move(spans), w.perm()};
  }

  WreathElem to_wreath() const {
    std::vector<AffElem> comps;
    comps.reserve(spans_.size());
    for (const auto& s : spans_) comps.push_back(chi_inv(s));
    return {std::move(comps), exchange_};
  }

  std::size_t size() const { return spans_.size(); }
  const std::vector<TimeSpan>& spans() const { return spans_; }
  const Perm& exchange() const { return exchange_; }

  friend bool operator==(const SpanConfig&, const SpanConfig&) = default;

 private:
  std::vector<TimeSpan> spans_;
  Perm exchange_;
};

/// Right action of a wreath element on a configuration of n timelines.
inline SpanConfig config_right_action(const SpanConfig& c, const WreathElem& w) {
  if (c.size() != w.size()) throw SizeMismatch("configuration and wreath element sizes differ");
  return SpanConfig::from_wreath(c.to_wreath() * w);
}

}  // namespace tempora
