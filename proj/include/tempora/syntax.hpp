#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "tempora/error.hpp"
#include "tempora/rational.hpp"
#include "tempora/term.hpp"

namespace tempora {

namespace detail {

enum class Tok { Int, Minus, Slash, Comma, LParen, RParen, Tensor, Then, After, Braid, Box, Id, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;
};

inline std::string describe(Tok k) {
  switch (k) {
    case Tok::Int: return "integer";
    case Tok::Minus: return "'-'";
    case Tok::Slash: return "'/'";
    case Tok::Comma: return "','";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Tensor: return "'(x)'";
    case Tok::Then: return "';'";
    case Tok::After: return "'.'";
    case Tok::Braid: return "'braid'";
    case Tok::Box: return "'box'";
    case Tok::Id: return "'id'";
    case Tok::End: return "end of input";
  }
  return "?";
}

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view w) { return src.substr(i, w.size()) == w; };
  auto word_end = [&](std::size_t from) {
    return from >= src.size() || !std::isalpha(static_cast<unsigned char>(src[from]));
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t at = i;
    auto push = [&](Tok k, std::size_t len) {
      out.push_back({k, src.substr(at, len), at});
      i += len;
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      push(Tok::Int, j - i);
    } else if (starts("(x)")) {
      push(Tok::Tensor, 3);
    } else if (starts("⊗")) {
      push(Tok::Tensor, std::string_view("⊗").size());
    } else if (starts("∘")) {
      push(Tok::After, std::string_view("∘").size());
    } else if (starts("γ")) {
      push(Tok::Braid, std::string_view("γ").size());
    } else if (starts("□")) {
      push(Tok::Box, std::string_view("□").size());
    } else if (starts("braid") && word_end(i + 5)) {
      push(Tok::Braid, 5);
    } else if (starts("box") && word_end(i + 3)) {
      push(Tok::Box, 3);
    } else if (starts("id") && word_end(i + 2)) {
      push(Tok::Id, 2);
    } else {
      switch (c) {
        case '-': push(Tok::Minus, 1); break;
        case '/': push(Tok::Slash, 1); break;
        case ',': push(Tok::Comma, 1); break;
        case '(': push(Tok::LParen, 1); break;
        case ')': push(Tok::RParen, 1); break;
        case ';': push(Tok::Then, 1); break;
        case '.': push(Tok::After, 1); break;
        default: throw SyntaxError("unexpected character '" + std::string(1, c) + "'", i);
      }
    }
  }
  out.push_back({Tok::End, {}, src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  Term parse_all() {
    Term t = chain();
    expect(Tok::End);
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }

  const Token& expect(Tok k) {
    const auto& t = peek();
    if (t.kind != k) throw SyntaxError("expected " + describe(k) + ", found " + describe(t.kind), t.pos);
    ++pos_;
    return t;
  }

  // ten ((";" | ".") ten)*, one operator kind per chain.
  Term chain() {
    std::vector<Term> parts{tensor()};
    Tok op = Tok::End;
    while (peek().kind == Tok::Then || peek().kind == Tok::After) {
      const auto& t = peek();
      if (op != Tok::End && t.kind != op) {
        throw SyntaxError("';' and '.' cannot be mixed without parentheses", t.pos);
      }
      op = t.kind;
      ++pos_;
      parts.push_back(tensor());
    }
    if (parts.size() == 1) return std::move(parts.front());
    if (op == Tok::After) std::reverse(parts.begin(), parts.end());
    return Term::seq(std::move(parts));
  }

  Term tensor() {
    std::vector<Term> parts{atom()};
    while (peek().kind == Tok::Tensor) {
      ++pos_;
      parts.push_back(atom());
    }
    return Term::tensor(std::move(parts));
  }

  Term atom() {
    const auto& t = peek();
    switch (t.kind) {
      case Tok::Id: {
        ++pos_;
        const auto& n = expect(Tok::Int);
        const auto width = std::stoul(std::string(n.text));
        if (width == 0) throw SyntaxError("identity width must be positive", n.pos);
        return Term::id(width);
      }
      case Tok::Braid:
        ++pos_;
        return Term::braid();
      case Tok::Box:
        ++pos_;
        return Term::box();
      case Tok::LParen: {
        const auto next = peek(1).kind;
        ++pos_;
        if (next == Tok::Int || next == Tok::Minus) return generator();
        Term inner = chain();
        expect(Tok::RParen);
        return inner;
      }
      default:
        throw SyntaxError("expected a term, found " + describe(t.kind), t.pos);
    }
  }

  Term generator() {
    Rational tr = rational();
    expect(Tok::Comma);
    const auto dil_pos = peek().pos;
    Rational d = rational();
    expect(Tok::RParen);
    if (d <= 0) throw SyntaxError("dilation must be strictly positive in generator", dil_pos);
    return Term::gen(AffElem(std::move(tr), std::move(d)));
  }

  Rational rational() {
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      negative = true;
      ++pos_;
    }
    const auto& num = expect(Tok::Int);
    Integer n(std::string(num.text));
    Integer d = 1;
    if (peek().kind == Tok::Slash) {
      ++pos_;
      const auto& den = expect(Tok::Int);
      d = Integer(std::string(den.text));
      if (d == 0) throw SyntaxError("zero denominator", den.pos);
    }
    return Rational(negative ? Integer(-n) : n, d);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the term language. "f ; g" is f then g; "g . f" is the same
/// morphism in classical order. Arity is not checked here; see typecheck.
inline Term parse(std::string_view text) { return detail::Parser(text).parse_all(); }

}  // namespace tempora
