#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "tempora/affine.hpp"
#include "tempora/error.hpp"
#include "tempora/normal_form.hpp"
#include "tempora/term.hpp"
#include "tempora/wreath.hpp"

namespace tempora {

enum class Variance { Covariant, Contravariant };

inline std::string to_string(Variance v) { return v == Variance::Covariant ? "covariant" : "contravariant"; }

/// One note: a span on a timeline, tagged with its leaf (1-based, in the
/// normal form of its step) and its position inside the owning bracket.
struct TimelineEvent {
  TimeSpan span;
  std::size_t leaf = 1;
  std::vector<std::size_t> path;
  std::size_t step = 0;

  friend bool operator==(const TimelineEvent&, const TimelineEvent&) = default;
};

/// The events of one morphism, one vector per timeline (output tree).
struct ScoreStep {
  std::vector<std::vector<TimelineEvent>> timelines;
  Perm exchange;

  friend bool operator==(const ScoreStep&, const ScoreStep&) = default;
};

/// A rhythm as n timelines of events plus, per generation step, the
/// exchange permutation of that step's morphism.
struct RhythmScore {
  std::vector<std::vector<TimelineEvent>> timelines;
  std::vector<Perm> exchanges;

  std::size_t step_count() const { return exchanges.size(); }

  friend bool operator==(const RhythmScore&, const RhythmScore&) = default;
};

/// The canonical basepoint: span (0,1) on each of n timelines.
inline SpanConfig canonical_basepoint(std::size_t n) { return SpanConfig(std::vector<TimeSpan>(n)); }

/// Span of group element g on a timeline whose identity span is `base`.
inline TimeSpan place(const TimeSpan& base, const AffElem& g) { return right_action(base, g); }

/// Group element placed at `span` on a timeline whose identity span is `base`.
inline AffElem unplace(const TimeSpan& base, const TimeSpan& span) { return interval_right(base, span); }

inline ScoreStep interpret(const BracketNormal& nf, const std::optional<SpanConfig>& basepoint = std::nullopt,
                           std::size_t step = 0) {
  const auto base = basepoint.value_or(canonical_basepoint(nf.cod()));
  if (base.size() != nf.cod()) {
    throw SizeMismatch("basepoint has " + std::to_string(base.size()) + " timelines, morphism has " +
                       std::to_string(nf.cod()));
  }
  ScoreStep out{std::vector<std::vector<TimelineEvent>>(nf.cod()), nf.input_perm};
  std::size_t leaf = 0;
  for (std::size_t j = 0; j < nf.cod(); ++j) {
    for (auto& path : leaf_paths(nf.forest[j])) {
      out.timelines[j].push_back({place(base.spans()[j], nf.leaves[leaf]), leaf + 1, std::move(path), step});
      ++leaf;
    }
  }
  return out;
}

inline ScoreStep interpret(const EndoNormal& nf, const std::optional<SpanConfig>& basepoint = std::nullopt,
                           std::size_t step = 0) {
  return interpret(as_bracket(nf), basepoint, step);
}

namespace detail {

inline bool event_order(const TimelineEvent& a, const TimelineEvent& b) {
  return std::tie(a.span.onset(), a.step, a.leaf) < std::tie(b.span.onset(), b.step, b.leaf);
}

}  // namespace detail

inline RhythmScore assemble_score(const std::vector<ScoreStep>& steps) {
  RhythmScore score;
  if (steps.empty()) return score;
  score.timelines.resize(steps.front().timelines.size());
  for (const auto& s : steps) {
    if (s.timelines.size() != score.timelines.size()) throw InconsistentWidths("steps have different timeline counts");
    for (std::size_t j = 0; j < s.timelines.size(); ++j)
      score.timelines[j].insert(score.timelines[j].end(), s.timelines[j].begin(), s.timelines[j].end());
    score.exchanges.push_back(s.exchange);
  }
  for (auto& line : score.timelines) std::stable_sort(line.begin(), line.end(), detail::event_order);
  return score;
}

/// Normal forms of initial, gen.initial, gen^2.initial, ... (covariant) or
/// initial, initial.gen, ... (contravariant), in classical notation. Index
/// 0 is the initial morphism.
inline std::vector<BracketNormal> generate_normals(const Term& initial, const Term& generator, std::size_t steps,
                                                   Variance v) {
  if (steps < 1) throw SemanticError("at least one generation step is required");
  const auto ai = typecheck(initial);
  const auto ag = typecheck(generator);
  if (ag.dom != ag.cod) throw NotEndo("generator " + to_string(ag) + " is not an endomorphism");
  if (v == Variance::Contravariant && initial.contains_box()) {
    throw VarianceError("contravariant generation would right-multiply bracketed time-spans");
  }
  const auto width = v == Variance::Covariant ? ai.cod : ai.dom;
  if (ag.dom != width) {
    throw ArityMismatch("generator width " + std::to_string(ag.dom) + " does not match initial morphism width " +
                        std::to_string(width));
  }
  std::vector<BracketNormal> out{normalize_bracket(initial)};
  for (std::size_t k = 1; k <= steps; ++k) {
    const auto prev = to_term(out.back());
    out.push_back(normalize_bracket(v == Variance::Covariant ? Term::seq(prev, generator) : Term::seq(generator, prev)));
  }
  return out;
}

inline RhythmScore iterate_generate(const Term& initial, const Term& generator, std::size_t steps, Variance v,
                                    const std::optional<SpanConfig>& basepoint = std::nullopt) {
  const auto normals = generate_normals(initial, generator, steps, v);
  std::vector<ScoreStep> parts;
  for (std::size_t k = 0; k < normals.size(); ++k) parts.push_back(interpret(normals[k], basepoint, k));
  return assemble_score(parts);
}

/// Rebuilds the normal form of every step from a score.
inline std::vector<BracketNormal> step_normals(const RhythmScore& score,
                                               const std::optional<SpanConfig>& basepoint = std::nullopt) {
  const std::size_t n = score.timelines.size();
  const auto base = basepoint.value_or(canonical_basepoint(n));
  if (base.size() != n) throw SizeMismatch("basepoint does not match the score's timeline count");
  std::vector<BracketNormal> out;
  for (std::size_t s = 0; s < score.step_count(); ++s) {
    std::vector<std::pair<std::size_t, AffElem>> leaves;
    std::vector<Shape> forest;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<const TimelineEvent*> events;
      for (const auto& e : score.timelines[j])
        if (e.step == s) events.push_back(&e);
      if (events.empty()) throw CorruptInput("step " + std::to_string(s) + " has no event on timeline " + std::to_string(j + 1));
      std::sort(events.begin(), events.end(), [](auto* a, auto* b) { return a->leaf < b->leaf; });
      std::vector<std::vector<std::size_t>> paths;
      for (const auto* e : events) {
        paths.push_back(e->path);
        leaves.emplace_back(e->leaf, unplace(base.spans()[j], e->span));
      }
      forest.push_back(shape_from_paths(paths));
    }
    std::vector<AffElem> decorations;
    for (std::size_t k = 0; k < leaves.size(); ++k) {
      if (leaves[k].first != k + 1) throw CorruptInput("leaf numbering of step " + std::to_string(s) + " is not 1..m");
      decorations.push_back(leaves[k].second);
    }
    if (score.exchanges[s].size() != decorations.size()) {
      throw InconsistentWidths("exchange of step " + std::to_string(s) + " does not match its leaf count");
    }
    out.push_back({score.exchanges[s], std::move(decorations), std::move(forest)});
  }
  return out;
}

/// The endomorphism E with E o from = to (classical order).
inline EndoNormal left_interval(const BracketNormal& from, const BracketNormal& to) {
  if (from.dom() != to.dom() || from.cod() != to.cod()) throw InconsistentWidths("steps have different widths");
  const std::size_t n = from.cod();
  // Tree of each leaf, and leaf of each input.
  auto owners = [](const BracketNormal& nf) {
    std::vector<std::size_t> owner;
    for (std::size_t j = 0; j < nf.forest.size(); ++j) owner.insert(owner.end(), nf.forest[j].leaf_count(), j);
    return owner;
  };
  const auto owner_from = owners(from);
  const auto owner_to = owners(to);
  std::vector<std::size_t> target(n, n);
  std::vector<std::optional<AffElem>> h(n);
  for (std::size_t input = 0; input < from.dom(); ++input) {
    const auto lf = from.input_perm(input);
    const auto lt = to.input_perm(input);
    const auto jf = owner_from[lf];
    const auto jt = owner_to[lt];
    if (target[jf] == n) {
      target[jf] = jt;
    } else if (target[jf] != jt) {
      throw CorruptInput("a bracket was split between steps; no transformation exists");
    }
    const auto g = to.leaves[lt] * aff_inv(from.leaves[lf]);
    if (!h[jt]) {
      h[jt] = g;
    } else if (*h[jt] != g) {
      throw CorruptInput("leaves of one bracket moved by different transformations; no transformation exists");
    }
  }
  std::vector<AffElem> comps;
  for (std::size_t j = 0; j < n; ++j) {
    if (!h[j]) throw CorruptInput("timeline " + std::to_string(j + 1) + " is not reached");
    comps.push_back(*h[j]);
  }
  Perm tau(target);
  for (std::size_t j = 0; j < n; ++j) {
    if (from.forest[j] != to.forest[tau(j)]) throw CorruptInput("bracket shapes differ between steps");
  }
  return {WreathElem(std::move(comps), std::move(tau))};
}

struct Analysis {
  std::vector<EndoNormal> intervals;
  std::optional<EndoNormal> generator;
};

/// Per-step intervals of a generated score, and the generator if all of
/// them agree.
inline Analysis analyze(const RhythmScore& score, Variance v,
                        const std::optional<SpanConfig>& basepoint = std::nullopt) {
  if (score.step_count() < 2) throw SemanticError("analysis needs at least two steps");
  const auto normals = step_normals(score, basepoint);
  Analysis out;
  for (std::size_t k = 0; k + 1 < normals.size(); ++k) {
    if (v == Variance::Covariant) {
      out.intervals.push_back(left_interval(normals[k], normals[k + 1]));
      continue;
    }
    const auto a = as_endo(normals[k]);
    const auto b = as_endo(normals[k + 1]);
    if (!a || !b) throw VarianceError("contravariant analysis of bracketed time-spans is not defined");
    out.intervals.push_back({wreath_inv(a->wreath) * b->wreath});
  }
  if (std::all_of(out.intervals.begin(), out.intervals.end(),
                  [&](const EndoNormal& e) { return e == out.intervals.front(); })) {
    out.generator = out.intervals.front();
  }
  return out;
}

/// Intervals between consecutive spans of a flat list: g with
/// g . s_k = s_{k+1} (covariant) or s_k . g = s_{k+1} (contravariant).
inline std::vector<AffElem> span_intervals(const std::vector<TimeSpan>& spans, Variance v) {
  std::vector<AffElem> out;
  for (std::size_t k = 0; k + 1 < spans.size(); ++k) {
    out.push_back(v == Variance::Covariant ? interval_left(spans[k], spans[k + 1])
                                           : interval_right(spans[k], spans[k + 1]));
  }
  return out;
}

/// Applies h in the frame of leaf k (1-based): left-composes the owning
/// bracket with g h g^-1, g being the leaf's decoration. The leaf becomes
/// g h and every relative interval inside the bracket is kept.
inline Term contextual_transform(const Term& t, std::size_t leaf, const AffElem& h) {
  const auto nf = normalize_bracket(t);
  const auto& g = leaf_decoration(nf, leaf);
  const auto tree = tree_of_leaf(nf, leaf);
  std::vector<Term> row;
  if (tree > 1) row.push_back(Term::id(tree - 1));
  row.push_back(Term::gen(conjugate(g, h)));
  if (nf.cod() > tree) row.push_back(Term::id(nf.cod() - tree));
  return Term::seq(t, Term::tensor(std::move(row)));
}

/// g_i^-1 g_j for leaves i and j (1-based).
inline AffElem relative_interval(const Term& t, std::size_t i, std::size_t j) {
  const auto nf = normalize_bracket(t);
  return aff_inv(leaf_decoration(nf, i)) * leaf_decoration(nf, j);
}

/// Human-readable timelines, one block per step.
inline std::string render_score_text(const RhythmScore& score) {
  std::string out;
  for (std::size_t s = 0; s < score.step_count(); ++s) {
    out += "step " + std::to_string(s) + "  exchange " + to_string(score.exchanges[s]) + "\n";
    for (std::size_t j = 0; j < score.timelines.size(); ++j) {
      std::string line = "  line " + std::to_string(j + 1) + ":";
      std::vector<const TimelineEvent*> events;
      for (const auto& e : score.timelines[j])
        if (e.step == s) events.push_back(&e);
      std::sort(events.begin(), events.end(), [](auto* a, auto* b) { return a->leaf < b->leaf; });
      const bool bracketed = events.size() > 1;
      if (bracketed) line += " [";
      for (std::size_t k = 0; k < events.size(); ++k) {
        line += " " + to_string(events[k]->span);
      }
      if (bracketed) line += " ]";
      out += line + "\n";
    }
  }
  return out;
}

}  // namespace tempora
