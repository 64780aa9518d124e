#pragma once

#include <ostream>
#include <string>

#include "tempora/error.hpp"
#include "tempora/rational.hpp"

namespace tempora {

/// Element (t, d) of the orientation-preserving affine group of the line:
/// translation part t, dilation part d > 0. Product is
/// (t1, d1) * (t2, d2) = (t1 + d1 t2, d1 d2).
class AffElem {
 public:
  AffElem() : t_(0), d_(1) {}
  AffElem(Rational t, Rational d) : t_(std::move(t)), d_(std::move(d)) {
    if (d_ <= 0) throw SemanticError("affine dilation must be strictly positive, got " + to_string(d_));
  }

  static AffElem identity() { return {}; }

  const Rational& t() const { return t_; }
  const Rational& d() const { return d_; }

  bool is_identity() const { return t_ == 0 && d_ == 1; }

  friend bool operator==(const AffElem&, const AffElem&) = default;

 private:
  Rational t_;
  Rational d_;
};

inline AffElem aff_mul(const AffElem& a, const AffElem& b) {
  return AffElem(a.t() + a.d() * b.t(), a.d() * b.d());
}

inline AffElem operator*(const AffElem& a, const AffElem& b) { return aff_mul(a, b); }

inline AffElem aff_inv(const AffElem& a) { return AffElem(-a.t() / a.d(), 1 / a.d()); }

/// g h g^-1
inline AffElem conjugate(const AffElem& g, const AffElem& h) { return g * h * aff_inv(g); }

inline std::string to_string(const AffElem& a) { return "(" + to_string(a.t()) + "," + to_string(a.d()) + ")"; }

inline std::ostream& operator<<(std::ostream& os, const AffElem& a) { return os << to_string(a); }

/// Half-open interval [onset, onset + duration) with duration > 0.
class TimeSpan {
 public:
  TimeSpan() : onset_(0), duration_(1) {}
  TimeSpan(Rational onset, Rational duration) : onset_(std::move(onset)), duration_(std::move(duration)) {
    if (duration_ <= 0) throw SemanticError("time-span duration must be strictly positive, got " + to_string(duration_));
  }

  const Rational& onset() const { return onset_; }
  const Rational& duration() const { return duration_; }
  Rational end() const { return onset_ + duration_; }

  friend bool operator==(const TimeSpan&, const TimeSpan&) = default;

 private:
  Rational onset_;
  Rational duration_;
};

inline std::string to_string(const TimeSpan& s) {
  return "(" + to_string(s.onset()) + "," + to_string(s.duration()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const TimeSpan& s) { return os << to_string(s); }

// Canonical bijection between group elements and time-spans; the identity
// maps to the span (0,1).
inline TimeSpan chi(const AffElem& g) { return TimeSpan(g.t(), g.d()); }
inline AffElem chi_inv(const TimeSpan& s) { return AffElem(s.onset(), s.duration()); }

/// s . g: translate by g.t durations of s, then scale the duration by g.d.
inline TimeSpan right_action(const TimeSpan& s, const AffElem& g) {
  return TimeSpan(s.onset() + s.duration() * g.t(), s.duration() * g.d());
}

/// g . s = chi(g * chi^-1(s)).
inline TimeSpan left_action(const AffElem& g, const TimeSpan& s) { return chi(g * chi_inv(s)); }

/// The unique g with left_action(g, from) == to.
inline AffElem interval_left(const TimeSpan& from, const TimeSpan& to) {
  return chi_inv(to) * aff_inv(chi_inv(from));
}

/// The unique g with right_action(from, g) == to.
inline AffElem interval_right(const TimeSpan& from, const TimeSpan& to) {
  return aff_inv(chi_inv(from)) * chi_inv(to);
}

}  // namespace tempora
