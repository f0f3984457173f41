#ifndef HOPFCALC_PARSER_HPP
#define HOPFCALC_PARSER_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopfcalc/hopf.hpp"
#include "hopfcalc/instances/connes_kreimer.hpp"
#include "hopfcalc/instances/polynomial.hpp"
#include "hopfcalc/instances/quasi_shuffle.hpp"
#include "hopfcalc/instances/shuffle.hpp"

namespace hopfcalc {

// Expression grammar over one instance:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := rational | (rational '*')? factor ('*' factor)*
//   factor := generator | '(' expr ')'
// Rationals are "p" or "p/q"; '*' between factors is the instance product;
// a bare rational term means that multiple of the unit. Generator literals
// are instance specific: monomials (1, x, x^3), words (ab), weighted words
// ((1)(2), where '('digit')' chains always lex as a literal), tree forests
// (T[T[]]).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
}

inline bool read_uint(std::string_view s, std::size_t& pos, unsigned long& out) {
  std::size_t start = pos;
  unsigned long v = 0;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
    v = v * 10 + static_cast<unsigned long>(s[pos] - '0');
    ++pos;
  }
  if (pos == start) return false;
  out = v;
  return true;
}

// "p" or "p/q" (no sign; signs belong to expr).
inline std::optional<Rational> read_rational(std::string_view s, std::size_t& pos) {
  std::size_t p = pos;
  unsigned long num = 0;
  if (!read_uint(s, p, num)) return std::nullopt;
  std::string lit = std::string(s.substr(pos, p - pos));
  if (p < s.size() && s[p] == '/') {
    std::size_t q = p + 1;
    unsigned long den = 0;
    if (!read_uint(s, q, den)) throw ParseError("expected denominator digits", p + 1);
    if (den == 0) throw ParseError("zero denominator", p + 1);
    lit += "/" + std::string(s.substr(p + 1, q - p - 1));
    p = q;
  }
  pos = p;
  return Rational::from_string(lit);
}

}  // namespace detail

// --- per-instance generator lexers ---------------------------------------
// Each returns std::nullopt without consuming input when the upcoming token
// cannot start a generator of this instance, and throws ParseError when a
// started literal is malformed.

inline std::optional<PolynomialKey> read_generator(const PolynomialAlgebra&,
                                                   std::string_view s,
                                                   std::size_t& pos) {
  if (pos < s.size() && s[pos] == '1') {
    ++pos;
    return PolynomialKey(0);
  }
  if (pos < s.size() && s[pos] == 'x') {
    ++pos;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      unsigned long e = 0;
      if (!detail::read_uint(s, pos, e))
        throw ParseError("expected exponent digits after '^'", pos);
      return PolynomialKey(static_cast<unsigned>(e));
    }
    return PolynomialKey(1);
  }
  return std::nullopt;
}

namespace detail {

template <typename A>
std::optional<WordKey> read_word(const A& alg, std::string_view s, std::size_t& pos) {
  if (pos < s.size() && s[pos] == '1') {
    ++pos;
    return WordKey();
  }
  std::size_t start = pos;
  std::string letters;
  while (pos < s.size() && s[pos] >= 'a' && s[pos] <= 'z') {
    if (!alg.valid_letter(s[pos]))
      throw ParseError(std::string("letter '") + s[pos] + "' outside the alphabet",
                       pos);
    letters.push_back(s[pos]);
    ++pos;
  }
  if (pos == start) return std::nullopt;
  return WordKey(std::move(letters));
}

}  // namespace detail

inline std::optional<WordKey> read_generator(const ShuffleAlgebra& alg,
                                             std::string_view s, std::size_t& pos) {
  return detail::read_word(alg, s, pos);
}

inline std::optional<WordKey> read_generator(const BrokenShuffleAlgebra& alg,
                                             std::string_view s, std::size_t& pos) {
  return detail::read_word(alg, s, pos);
}

// '('digits')' chains; '(' followed by anything else is left for grouping.
inline std::optional<WeightedWordKey> read_generator(const QuasiShuffleAlgebra&,
                                                     std::string_view s,
                                                     std::size_t& pos) {
  if (pos < s.size() && s[pos] == '1') {
    ++pos;
    return WeightedWordKey();
  }
  if (pos >= s.size() || s[pos] != '(' || pos + 1 >= s.size() ||
      !(s[pos + 1] >= '0' && s[pos + 1] <= '9'))
    return std::nullopt;
  std::vector<unsigned> weights;
  while (pos + 1 < s.size() && s[pos] == '(' && s[pos + 1] >= '0' &&
         s[pos + 1] <= '9') {
    std::size_t p = pos + 1;
    unsigned long w = 0;
    detail::read_uint(s, p, w);
    if (p >= s.size() || s[p] != ')')
      throw ParseError("expected ')' in weighted letter", p);
    if (w == 0) throw ParseError("letter weights must be positive", pos + 1);
    weights.push_back(static_cast<unsigned>(w));
    pos = p + 1;
  }
  return WeightedWordKey(std::move(weights));
}

namespace detail {

inline Tree read_tree(std::string_view s, std::size_t& pos) {
  if (pos >= s.size() || s[pos] != 'T')
    throw ParseError("expected tree literal 'T[...]'", pos);
  ++pos;
  if (pos >= s.size() || s[pos] != '[')
    throw ParseError("expected '[' after 'T'", pos);
  ++pos;
  std::vector<Tree> children;
  skip_ws(s, pos);
  if (pos < s.size() && s[pos] == ']') {
    ++pos;
    return Tree(std::move(children));
  }
  while (true) {
    children.push_back(read_tree(s, pos));
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      skip_ws(s, pos);
      continue;
    }
    if (pos < s.size() && s[pos] == ']') {
      ++pos;
      return Tree(std::move(children));
    }
    throw ParseError("expected ',' or ']' in tree literal", pos);
  }
}

}  // namespace detail

inline std::optional<ForestKey> read_generator(const ConnesKreimerAlgebra&,
                                               std::string_view s,
                                               std::size_t& pos) {
  if (pos < s.size() && s[pos] == '1') {
    ++pos;
    return ForestKey();
  }
  if (pos >= s.size() || s[pos] != 'T') return std::nullopt;
  Tree t = detail::read_tree(s, pos);
  return ForestKey({std::move(t)});
}

// --- the parser ------------------------------------------------------------

namespace detail {

template <BialgebraLike H>
Element<KeyOf<H>> parse_expr(const H& h, std::string_view s, std::size_t& pos,
                             bool allow_product);

template <BialgebraLike H>
Element<KeyOf<H>> parse_factor(const H& h, std::string_view s, std::size_t& pos,
                               bool allow_product) {
  skip_ws(s, pos);
  if (auto key = read_generator(h, s, pos)) return Element<KeyOf<H>>(*key);
  if (pos < s.size() && s[pos] == '(') {
    ++pos;
    Element<KeyOf<H>> inner = parse_expr(h, s, pos, allow_product);
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
    return inner;
  }
  throw ParseError("expected a generator or '('", pos);
}

template <BialgebraLike H>
Element<KeyOf<H>> parse_term(const H& h, std::string_view s, std::size_t& pos,
                             bool allow_product) {
  skip_ws(s, pos);
  Rational coeff(1);
  if (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
    // Could be a scalar coefficient, a bare rational term, or (for "1") a
    // unit generator; the unit reading coincides with the scalar one.
    std::size_t mark = pos;
    std::optional<Rational> r = read_rational(s, pos);
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      coeff = *r;
    } else if (mark + 1 == pos && s[mark] == '1') {
      // plain "1": the unit literal; fall through to the generator path
      pos = mark;
    } else {
      return unit_element(h, *r);  // bare rational term
    }
  }
  Element<KeyOf<H>> value = parse_factor(h, s, pos, allow_product);
  while (true) {
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == '*') {
      if (!allow_product)
        throw ParseError("product used in a coalgebra-only context", pos);
      ++pos;
      Element<KeyOf<H>> rhs = parse_factor(h, s, pos, allow_product);
      value = multiply(h, value, rhs);
    } else {
      break;
    }
  }
  value *= coeff;
  return value;
}

template <BialgebraLike H>
Element<KeyOf<H>> parse_expr(const H& h, std::string_view s, std::size_t& pos,
                             bool allow_product) {
  skip_ws(s, pos);
  bool negate = false;
  if (pos < s.size() && s[pos] == '-') {
    negate = true;
    ++pos;
  }
  Element<KeyOf<H>> acc = parse_term(h, s, pos, allow_product);
  if (negate) acc = -acc;
  while (true) {
    skip_ws(s, pos);
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      const bool minus = s[pos] == '-';
      ++pos;
      Element<KeyOf<H>> t = parse_term(h, s, pos, allow_product);
      if (minus)
        acc -= t;
      else
        acc += t;
    } else {
      break;
    }
  }
  return acc;
}

}  // namespace detail

// Parses an expression and evaluates it in the instance. Throws ParseError
// with a position on syntax errors, unknown generators, or (when
// allow_product is false) product use.
template <BialgebraLike H>
Element<KeyOf<H>> parse_expression(const H& h, std::string_view src,
                                   bool allow_product = true) {
  std::size_t pos = 0;
  Element<KeyOf<H>> value = detail::parse_expr(h, src, pos, allow_product);
  detail::skip_ws(src, pos);
  if (pos != src.size()) throw ParseError("unexpected trailing input", pos);
  return value;
}

}  // namespace hopfcalc

#endif  // HOPFCALC_PARSER_HPP
