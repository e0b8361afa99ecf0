#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "bettiforge/polynomial.hpp"

namespace bettiforge {

/// Removes '#' comments (to end of line).
inline std::string strip_comments(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_comment = false;
  for (char c : text) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    out.push_back(in_comment ? ' ' : c);
  }
  return out;
}

namespace parse_detail {

template <class F>
class ExpressionParser {
 public:
  using Poly = Polynomial<F>;

  ExpressionParser(std::string_view src, RingPtr<F> ring) : src_(src), ring_(std::move(ring)) {}

  Poly parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    Poly p = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return p;
  }

 private:
  // expr := term (('+'|'-') term)*
  Poly expr() {
    Poly acc = signed_term();
    while (true) {
      skip_space();
      if (peek('+')) {
        ++pos_;
        acc = acc + signed_term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - signed_term();
      } else {
        return acc;
      }
    }
  }

  // Unary signs bind looser than '^' and '*': -x^2 = -(x^2).
  Poly signed_term() {
    bool negate = false;
    skip_space();
    while (peek('+') || peek('-')) {
      if (src_[pos_] == '-') negate = !negate;
      ++pos_;
      skip_space();
    }
    Poly t = term();
    return negate ? -t : t;
  }

  // term := factor ('*'? factor)*
  Poly term() {
    Poly acc = factor();
    while (true) {
      skip_space();
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  // factor := base ('^' uint)?
  Poly factor() {
    Poly b = base();
    skip_space();
    if (peek('^')) {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        throw ParseError("expected a non-negative integer exponent", pos_);
      unsigned long e = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(src_[pos_] - '0');
        if (e > 4095) throw ParseError("exponent too large", start);
        ++pos_;
      }
      return b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  Poly base() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip_space();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return integer();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Poly integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (!at_end() && (src_[pos_] == '.' || src_[pos_] == '/')) throw ParseError("non-integer literal", pos_);
    mpz_class v(std::string(src_.substr(start, pos_ - start)), 10);
    return Poly::constant(ring_, ring_->field.from_integer(v));
  }

  // Longest variable name matching at the cursor; juxtaposed names multiply.
  Poly variable() {
    std::size_t best = 0;
    int index = -1;
    for (int i = 0; i < ring_->nvars(); ++i) {
      const auto& n = ring_->vars.name(i);
      if (src_.substr(pos_, n.size()) == n && n.size() > best) {
        best = n.size();
        index = i;
      }
    }
    if (index < 0) {
      std::size_t end = pos_;
      while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) ++end;
      throw ParseError("unknown identifier '" + std::string(src_.substr(pos_, end - pos_)) + "'", pos_);
    }
    pos_ += best;
    return Poly::variable(ring_, index);
  }

  bool starts_factor() const {
    if (at_end()) return false;
    char c = src_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '_';
  }
  bool peek(char c) const { return !at_end() && src_[pos_] == c; }
  bool at_end() const { return pos_ >= src_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  std::string_view src_;
  RingPtr<F> ring_;
  std::size_t pos_ = 0;
};

}  // namespace parse_detail

/// Parses an integer-coefficient polynomial expression over the ring.
/// '#' comments are ignored.  Offsets in errors are byte offsets into `text`.
template <class F>
Polynomial<F> parse_polynomial(std::string_view text, RingPtr<F> ring) {
  std::string clean = strip_comments(text);
  return parse_detail::ExpressionParser<F>(clean, std::move(ring)).parse();
}

/// Twist multisets of a printed resolution, F_0 first; S(-k) contributes
/// k, S contributes 0, entries ascending.  Accepts both
/// "S(-k)^m" and "S[-k]^m" twists; "(+)" separates summands.
std::vector<std::vector<int>> parse_resolution_text(std::string_view text);

}  // namespace bettiforge
