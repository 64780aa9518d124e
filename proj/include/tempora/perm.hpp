#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "tempora/error.hpp"

namespace tempora {

/// Permutation of {0..n-1} stored as its image vector (p(i) = images()[i]).
/// Text and JSON forms are 1-based.
///
/// Composition is p * q = p o q (q first). Acting on tuples moves the entry
/// at position j to position p(j), i.e. (p . x)_i = x_{p^-1(i)}; this is a
/// left action and matches the permutation matrix with P(i,j) = 1 iff
/// i = p(j).
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
      if (v >= images_.size() || seen[v]) throw SemanticError("permutation images are not a bijection");
      seen[v] = true;
    }
  }

  static Perm identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return Perm(std::move(v));
  }

  /// Transposition of positions i and i+1.
  static Perm adjacent_swap(std::size_t n, std::size_t i) {
    auto p = identity(n);
    std::swap(p.images_.at(i), p.images_.at(i + 1));
    return p;
  }

  /// From 1-based images.
  static Perm from_one_based(const std::vector<std::size_t>& images) {
    std::vector<std::size_t> v;
    v.reserve(images.size());
    for (auto x : images) {
      if (x == 0) throw SemanticError("1-based permutation image 0");
      v.push_back(x - 1);
    }
    return Perm(std::move(v));
  }

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  const std::vector<std::size_t>& images() const { return images_; }

  std::vector<std::size_t> one_based() const {
    std::vector<std::size_t> v(images_);
    for (auto& x : v) ++x;
    return v;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Perm inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Perm(std::move(inv));
  }

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<std::size_t> images_;
};

inline Perm perm_compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) {
    throw SizeMismatch("permutation sizes differ: " + std::to_string(p.size()) + " vs " + std::to_string(q.size()));
  }
  std::vector<std::size_t> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = p(q(i));
  return Perm(std::move(v));
}

inline Perm operator*(const Perm& p, const Perm& q) { return perm_compose(p, q); }

/// p on the left, q on the right, q's points shifted past p's.
inline Perm perm_direct_sum(const Perm& p, const Perm& q) {
  std::vector<std::size_t> v(p.images());
  for (auto x : q.images()) v.push_back(x + p.size());
  return Perm(std::move(v));
}

template <typename T>
std::vector<T> perm_apply(const Perm& p, const std::vector<T>& xs) {
  if (xs.size() != p.size()) {
    throw SizeMismatch("tuple of length " + std::to_string(xs.size()) + " acted on by permutation of size " +
                       std::to_string(p.size()));
  }
  std::vector<T> out(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) out[p(j)] = xs[j];
  return out;
}

inline std::string to_string(const Perm& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p(i) + 1);
  }
  return s + "]";
}

}  // namespace tempora
