#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tempora/affine.hpp"
#include "tempora/error.hpp"
#include "tempora/normal_form.hpp"
#include "tempora/perm.hpp"
#include "tempora/rational.hpp"
#include "tempora/rhythm.hpp"
#include "tempora/wreath.hpp"

// Rationals are always strings "p/q" or "p"; permutations are 1-based
// image lists.
namespace tempora::json_io {

using Json = nlohmann::ordered_json;

inline Json encode(const Rational& r) { return to_string(r); }

inline Rational decode_rational(const Json& j) {
  if (!j.is_string()) throw SyntaxError("expected a rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

inline Json encode(const AffElem& g) { return Json::array({encode(g.t()), encode(g.d())}); }

inline AffElem decode_aff(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw SyntaxError("expected [\"t\",\"d\"], got " + j.dump());
  const auto d = decode_rational(j[1]);
  if (d <= 0) throw SemanticError("dilation must be strictly positive, got " + to_string(d));
  return {decode_rational(j[0]), d};
}

inline Json encode(const Perm& p) { return Json(p.one_based()); }

inline Perm decode_perm(const Json& j) {
  if (!j.is_array()) throw SyntaxError("expected a permutation array, got " + j.dump());
  std::vector<std::size_t> images;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw SyntaxError("permutation images must be integers, got " + x.dump());
    if (x.get<long long>() < 1) throw SemanticError("permutation images are 1-based, got " + x.dump());
    images.push_back(x.get<std::size_t>());
  }
  return Perm::from_one_based(images);
}

inline Json encode(const WreathElem& w) {
  Json comps = Json::array();
  for (const auto& c : w.components()) comps.push_back(encode(c));
  return Json{{"components", comps}, {"perm", encode(w.perm())}};
}

inline WreathElem decode_wreath(const Json& j) {
  if (!j.is_object() || !j.contains("components") || !j.contains("perm")) {
    throw SyntaxError("wreath element needs \"components\" and \"perm\"");
  }
  std::vector<AffElem> comps;
  for (const auto& c : j.at("components")) comps.push_back(decode_aff(c));
  return {std::move(comps), decode_perm(j.at("perm"))};
}

inline Json encode(const RationalMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(encode(x));
    rows.push_back(r);
  }
  return rows;
}

inline RationalMatrix decode_matrix(const Json& j) {
  if (!j.is_array()) throw SyntaxError("expected a row-major matrix");
  RationalMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw SyntaxError("expected a matrix row");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(decode_rational(x));
    m.push_back(std::move(r));
  }
  require_square(m);
  return m;
}

inline Json encode(const MatrixAffine& m) {
  Json offset = Json::array();
  for (const auto& x : m.offset) offset.push_back(encode(x));
  return Json{{"offset", offset}, {"matrix", encode(m.matrix)}};
}

inline MatrixAffine decode_matrix_affine(const Json& j) {
  MatrixAffine m;
  for (const auto& x : j.at("offset")) m.offset.push_back(decode_rational(x));
  m.matrix = decode_matrix(j.at("matrix"));
  if (m.offset.size() != m.matrix.size()) throw SizeMismatch("offset length does not match matrix size");
  return m;
}

inline Json encode(const Shape& s) {
  if (s.is_leaf()) return "leaf";
  return Json::array({"node", encode(s.children[0]), encode(s.children[1])});
}

inline Shape decode_shape(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "leaf") return Shape::leaf();
  if (j.is_array() && j.size() == 3 && j[0] == "node") return Shape::node(decode_shape(j[1]), decode_shape(j[2]));
  throw SyntaxError("expected \"leaf\" or [\"node\", tree, tree], got " + j.dump());
}

inline Json encode(const BracketNormal& nf) {
  Json leaves = Json::array();
  for (const auto& g : nf.leaves) leaves.push_back(encode(g));
  Json forest = Json::array();
  for (const auto& s : nf.forest) forest.push_back(encode(s));
  return Json{{"perm", encode(nf.input_perm)}, {"leaves", leaves}, {"forest", forest}};
}

inline BracketNormal decode_bracket(const Json& j) {
  BracketNormal nf{decode_perm(j.at("perm")), {}, {}};
  for (const auto& g : j.at("leaves")) nf.leaves.push_back(decode_aff(g));
  std::size_t count = 0;
  for (const auto& s : j.at("forest")) {
    nf.forest.push_back(decode_shape(s));
    count += nf.forest.back().leaf_count();
  }
  if (count != nf.leaves.size() || nf.input_perm.size() != nf.leaves.size()) {
    throw SizeMismatch("forest, leaves and permutation sizes disagree");
  }
  return nf;
}

inline Json encode(const EndoNormal& e) { return encode(e.wreath); }

inline Json encode(const RhythmScore& score) {
  Json lines = Json::array();
  for (const auto& line : score.timelines) {
    Json events = Json::array();
    for (const auto& e : line) {
      events.push_back(Json{{"onset", encode(e.span.onset())},
                            {"duration", encode(e.span.duration())},
                            {"leaf", e.leaf},
                            {"path", e.path},
                            {"step", e.step}});
    }
    lines.push_back(events);
  }
  Json exchanges = Json::array();
  for (const auto& p : score.exchanges) exchanges.push_back(encode(p));
  return Json{{"timelines", lines}, {"exchanges", exchanges}};
}

inline RhythmScore decode_score(const Json& j) {
  if (!j.is_object() || !j.contains("timelines") || !j.contains("exchanges")) {
    throw SyntaxError("score needs \"timelines\" and \"exchanges\"");
  }
  RhythmScore score;
  for (const auto& line : j.at("timelines")) {
    std::vector<TimelineEvent> events;
    for (const auto& e : line) {
      const auto d = decode_rational(e.at("duration"));
      if (d <= 0) throw SemanticError("event duration must be strictly positive");
      events.push_back({TimeSpan(decode_rational(e.at("onset")), d), e.at("leaf").get<std::size_t>(),
                        e.at("path").get<std::vector<std::size_t>>(), e.value("step", std::size_t{0})});
    }
    score.timelines.push_back(std::move(events));
  }
  for (const auto& p : j.at("exchanges")) score.exchanges.push_back(decode_perm(p));
  return score;
}

inline Json encode(const Analysis& a) {
  Json intervals = Json::array();
  for (const auto& e : a.intervals) intervals.push_back(encode(e));
  return Json{{"intervals", intervals}, {"generator", a.generator ? encode(*a.generator) : Json(nullptr)}};
}

}  // namespace tempora::json_io
