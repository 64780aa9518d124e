#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tempora/affine.hpp"
#include "tempora/normal_form.hpp"
#include "tempora/syntax.hpp"
#include "tempora/term.hpp"

namespace tempora {

/// Both sides of one defining relation, already decorated.
struct RelationInstance {
  std::string name;
  Term lhs;
  Term rhs;
};

/// Small random group element with dyadic-ish rational parts.
template <typename Rng>
AffElem sample_aff(Rng& rng) {
  static constexpr long long dens[] = {1, 2, 3, 4, 8};
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> pos(1, 8);
  std::uniform_int_distribution<std::size_t> den(0, std::size(dens) - 1);
  return {make_rational(num(rng), dens[den(rng)]), make_rational(pos(rng), dens[den(rng)])};
}

namespace detail {

template <typename Rng>
Term random_layer(Rng& rng, std::size_t width) {
  std::vector<Term> gens;
  for (std::size_t i = 0; i < width; ++i) gens.push_back(Term::gen(sample_aff(rng)));
  return Term::tensor(std::move(gens));
}

// pre ; side ; post, with the same pre and post on both sides.
inline RelationInstance decorate(std::string name, const Term& lhs, const Term& rhs, const Term& pre, const Term& post) {
  return {std::move(name), Term::seq({pre, lhs, post}), Term::seq({pre, rhs, post})};
}

}  // namespace detail

/// R1: h o box o (g1 (x) g2) = box o (h g1 (x) h g2).
inline RelationInstance relation_r1(const AffElem& h, const AffElem& g1, const AffElem& g2) {
  return {"R1", Term::seq({Term::tensor(Term::gen(g1), Term::gen(g2)), Term::box(), Term::gen(h)}),
          Term::seq(Term::tensor(Term::gen(h * g1), Term::gen(h * g2)), Term::box())};
}

/// The bare (undecorated) sides of R2, R3 and R4 in diagram order. R4 is
/// the exchange of two brackets, braid o (box (x) box).
inline RelationInstance relation_r2() {
  return {"R2", parse("id1 (x) box ; braid"), parse("braid (x) id1 ; id1 (x) braid ; box (x) id1")};
}
inline RelationInstance relation_r3() {
  return {"R3", parse("box (x) id1 ; braid"), parse("id1 (x) braid ; braid (x) id1 ; id1 (x) box")};
}
inline RelationInstance relation_r4() {
  return {"R4", parse("box (x) box ; braid"),
          parse("id1 (x) braid (x) id1 ; braid (x) braid ; id1 (x) braid (x) id1 ; box (x) box")};
}

/// One random instance of each relation, decorated on its input and output
/// wires.
template <typename Rng>
std::vector<RelationInstance> sample_relations(Rng& rng) {
  std::vector<RelationInstance> out;
  {
    const auto h = sample_aff(rng);
    const auto g1 = sample_aff(rng);
    const auto g2 = sample_aff(rng);
    auto r1 = relation_r1(h, g1, g2);
    out.push_back(detail::decorate("R1", r1.lhs, r1.rhs, detail::random_layer(rng, 2), detail::random_layer(rng, 1)));
  }
  for (const auto& r : {relation_r2(), relation_r3(), relation_r4()}) {
    const auto ar = typecheck(r.lhs);
    const auto pre = detail::random_layer(rng, ar.dom);
    const auto post = detail::random_layer(rng, ar.cod);
    out.push_back(detail::decorate(r.name, r.lhs, r.rhs, pre, post));
  }
  return out;
}

struct RelationReport {
  struct Line {
    std::string name;
    std::size_t failures = 0;
    std::size_t samples = 0;
  };
  std::vector<Line> lines;

  bool ok() const {
    for (const auto& l : lines)
      if (l.failures) return false;
    return true;
  }

  std::string text() const {
    std::string s;
    for (const auto& l : lines) {
      if (!s.empty()) s += ' ';
      s += l.name + (l.failures ? " FAIL(" + std::to_string(l.failures) + "/" + std::to_string(l.samples) + ")" : " ok");
    }
    return s;
  }
};

/// Checks every relation on `samples` random decorations drawn from `seed`.
inline RelationReport verify_relations(std::size_t samples, std::uint64_t seed, const NormalizeOptions& opts = {}) {
  std::mt19937_64 rng(seed);
  RelationReport report;
  for (const char* name : {"R1", "R2", "R3", "R4"}) report.lines.push_back({name, 0, 0});
  for (std::size_t i = 0; i < samples; ++i) {
    const auto batch = sample_relations(rng);
    for (std::size_t r = 0; r < batch.size(); ++r) {
      ++report.lines[r].samples;
      if (!terms_equal(batch[r].lhs, batch[r].rhs, opts)) ++report.lines[r].failures;
    }
  }
  return report;
}

}  // namespace tempora
