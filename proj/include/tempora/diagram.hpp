#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "tempora/affine.hpp"
#include "tempora/error.hpp"
#include "tempora/term.hpp"

namespace tempora {

/// One generator box in a string diagram.
struct Atom {
  enum class Kind { Wire, Gen, Braid, Box };
  Kind kind = Kind::Wire;
  AffElem gen;

  std::size_t dom() const { return kind == Kind::Braid || kind == Kind::Box ? 2 : 1; }
  std::size_t cod() const { return kind == Kind::Braid ? 2 : 1; }

  friend bool operator==(const Atom&, const Atom&) = default;
};

inline Atom wire_atom() { return {}; }
inline Atom gen_atom(AffElem g) { return {Atom::Kind::Gen, std::move(g)}; }
inline Atom braid_atom() { return {Atom::Kind::Braid, {}}; }
inline Atom box_atom() { return {Atom::Kind::Box, {}}; }

using Layer = std::vector<Atom>;

/// Term cut into horizontal layers, top to bottom.
struct LayeredDiagram {
  std::size_t dom = 0;
  std::vector<Layer> layers;

  std::size_t cod() const {
    if (layers.empty()) return dom;
    std::size_t n = 0;
    for (const auto& a : layers.back()) n += a.cod();
    return n;
  }
};

inline LayeredDiagram layers_of(const Term& t) {
  typecheck(t);
  switch (t.kind()) {
    case Term::Kind::Id:
      return {t.width(), {}};
    case Term::Kind::Gen:
      return {1, {{gen_atom(t.generator())}}};
    case Term::Kind::Braid:
      return {2, {{braid_atom()}}};
    case Term::Kind::Box:
      return {2, {{box_atom()}}};
    case Term::Kind::Seq: {
      LayeredDiagram out = layers_of(t.parts().front());
      for (std::size_t i = 1; i < t.parts().size(); ++i) {
        auto next = layers_of(t.parts()[i]);
        for (auto& l : next.layers) out.layers.push_back(std::move(l));
      }
      return out;
    }
    case Term::Kind::Tensor: {
      std::vector<LayeredDiagram> parts;
      std::size_t height = 0;
      LayeredDiagram out;
      for (const auto& p : t.parts()) {
        parts.push_back(layers_of(p));
        height = std::max(height, parts.back().layers.size());
        out.dom += parts.back().dom;
      }
      out.layers.resize(height);
      for (std::size_t h = 0; h < height; ++h) {
        for (const auto& p : parts) {
          if (h < p.layers.size()) {
            out.layers[h].insert(out.layers[h].end(), p.layers[h].begin(), p.layers[h].end());
          } else {
            out.layers[h].insert(out.layers[h].end(), p.cod(), wire_atom());
          }
        }
      }
      return out;
    }
  }
  throw InvariantBreach("unknown term kind");
}

/// A single non-wire atom whose first input is wire `pos` of the current
/// cross-section; every other wire passes straight through.
struct Slice {
  std::size_t pos = 0;
  Atom atom;

  friend bool operator==(const Slice&, const Slice&) = default;
};

struct SlicedDiagram {
  std::size_t dom = 0;
  std::vector<Slice> slices;
};

inline SlicedDiagram slices_of(const LayeredDiagram& d) {
  SlicedDiagram out{d.dom, {}};
  for (const auto& layer : d.layers) {
    std::size_t offset = 0;
    for (const auto& a : layer) {
      if (a.kind != Atom::Kind::Wire) out.slices.push_back({offset, a});
      offset += a.cod();
    }
  }
  return out;
}

inline SlicedDiagram slices_of(const Term& t) { return slices_of(layers_of(t)); }

inline Term term_of(const SlicedDiagram& d) {
  std::vector<Term> parts;
  std::size_t width = d.dom;
  for (const auto& s : d.slices) {
    std::vector<Term> row;
    if (s.pos > 0) row.push_back(Term::id(s.pos));
    switch (s.atom.kind) {
      case Atom::Kind::Gen: row.push_back(Term::gen(s.atom.gen)); break;
      case Atom::Kind::Braid: row.push_back(Term::braid()); break;
      case Atom::Kind::Box: row.push_back(Term::box()); break;
      case Atom::Kind::Wire: row.push_back(Term::id(1)); break;
    }
    const auto tail = width - s.pos - s.atom.dom();
    if (tail > 0) row.push_back(Term::id(tail));
    parts.push_back(Term::tensor(std::move(row)));
    width = width - s.atom.dom() + s.atom.cod();
  }
  if (parts.empty()) return Term::id(d.dom);
  return Term::seq(std::move(parts));
}

/// Graphviz rendering with inputs on top. Strings are edges; a braiding is
/// drawn as two crossing edges.
inline std::string render_dot(const Term& t) {
  const auto d = layers_of(t);
  std::string out = "digraph morphism {\n  rankdir=TB;\n  ordering=out;\n  edge [arrowhead=none];\n";
  std::size_t counter = 0;
  auto fresh = [&](const std::string& prefix) { return prefix + std::to_string(counter++); };
  auto same_rank = [&](const std::vector<std::string>& names) {
    if (names.empty()) return;
    out += "  { rank=same;";
    for (const auto& n : names) out += " " + n + ";";
    out += " }\n";
    for (std::size_t i = 1; i < names.size(); ++i) out += "  " + names[i - 1] + " -> " + names[i] + " [style=invis];\n";
  };
  auto edge = [&](const std::string& a, const std::string& b) { out += "  " + a + " -> " + b + ";\n"; };

  std::vector<std::string> ends;
  for (std::size_t i = 0; i < d.dom; ++i) {
    ends.push_back("in" + std::to_string(i));
    out += "  " + ends.back() + " [shape=point];\n";
  }
  same_rank(ends);

  for (const auto& layer : d.layers) {
    std::vector<std::string> next;
    std::vector<std::string> rank;
    std::size_t w = 0;
    for (const auto& a : layer) {
      switch (a.kind) {
        case Atom::Kind::Wire:
          next.push_back(ends[w]);
          break;
        case Atom::Kind::Gen: {
          const auto n = fresh("g");
          out += "  " + n + " [shape=box,label=\"" + to_string(a.gen) + "\"];\n";
          edge(ends[w], n);
          next.push_back(n);
          rank.push_back(n);
          break;
        }
        case Atom::Kind::Braid: {
          const auto left = fresh("x");
          const auto right = fresh("x");
          out += "  " + left + " [shape=point,width=0.03];\n  " + right + " [shape=point,width=0.03];\n";
          edge(ends[w], right);
          edge(ends[w + 1], left);
          next.push_back(left);
          next.push_back(right);
          rank.push_back(left);
          rank.push_back(right);
          break;
        }
        case Atom::Kind::Box: {
          const auto n = fresh("b");
          out += "  " + n + " [shape=invtriangle,label=\"box\"];\n";
          edge(ends[w], n);
          edge(ends[w + 1], n);
          next.push_back(n);
          rank.push_back(n);
          break;
        }
      }
      w += a.dom();
    }
    same_rank(rank);
    ends = std::move(next);
  }

  std::vector<std::string> outs;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    outs.push_back("out" + std::to_string(i));
    out += "  " + outs.back() + " [shape=point];\n";
    edge(ends[i], outs.back());
  }
  same_rank(outs);
  out += "}\n";
  return out;
}

/// Text rendering with one column per wire and composition read top to
/// bottom. A braiding is drawn as a crossing over two rows; a bracket
/// joins its two columns into the left one.
inline std::string render_ascii(const Term& t) {
  const auto d = layers_of(t);
  std::size_t cell = 5;
  for (const auto& layer : d.layers)
    for (const auto& a : layer)
      if (a.kind == Atom::Kind::Gen) cell = std::max(cell, to_string(a.gen).size() + 2);

  auto center = [&](const std::string& s) {
    const auto pad = cell > s.size() ? cell - s.size() : 0;
    return std::string(pad / 2, ' ') + s + std::string(pad - pad / 2, ' ');
  };
  auto emit = [](std::string& out, std::string row) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + "\n";
  };

  std::string out;
  std::string wires;
  for (std::size_t i = 0; i < d.dom; ++i) wires += center("|");
  emit(out, wires);

  for (const auto& layer : d.layers) {
    std::string top;
    std::string bottom;
    for (const auto& a : layer) {
      switch (a.kind) {
        case Atom::Kind::Wire:
          top += center("|");
          bottom += center("|");
          break;
        case Atom::Kind::Gen:
          top += center(to_string(a.gen));
          bottom += center("|");
          break;
        case Atom::Kind::Braid:
          top += center("\\") + center("/");
          bottom += center("/") + center("\\");
          break;
        case Atom::Kind::Box:
          top += center("\\") + center("/");
          bottom += center("box") + std::string(cell, ' ');
          break;
      }
    }
    emit(out, top);
    emit(out, bottom);
  }
  return out;
}

}  // namespace tempora
