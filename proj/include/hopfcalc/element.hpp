#ifndef HOPFCALC_ELEMENT_HPP
#define HOPFCALC_ELEMENT_HPP

#include <concepts>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include "hopfcalc/rational.hpp"

namespace hopfcalc {

// A canonical basis label. Instances supply the concrete type: the payload
// must already be in canonical form, the order must be total and
// deterministic across runs, and degree() must be 0 exactly on the unit key
// of a connected instance.
template <typename K>
concept BasisKey = std::regular<K> && std::totally_ordered<K> &&
    requires(const K& k) {
      { k.degree() } -> std::convertible_to<int>;
      { k.to_string() } -> std::convertible_to<std::string>;
    };

// Finitely supported formal sum of basis keys with Rational coefficients.
// Zero coefficients are never stored; equality is equality of term maps.
template <BasisKey K>
class Element {
 public:
  using Key = K;
  using Terms = std::map<K, Rational>;

  Element() = default;
  explicit Element(const K& k) { terms_.emplace(k, Rational(1)); }
  Element(const K& k, const Rational& c) {
    if (!c.is_zero()) terms_.emplace(k, c);
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const& { return terms_; }
  // rvalue overload returns by value so `for (… : f(x).terms())` stays safe
  Terms terms() && { return std::move(terms_); }

  Rational coefficient(const K& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational() : it->second;
  }

  void add_term(const K& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  Element& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  Element operator-() const {
    Element r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }

  friend bool operator==(const Element&, const Element&) = default;

  // Max degree over the support. The zero element has no degree.
  int max_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of the zero element");
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.degree());
    return d;
  }

  // Normal-form audit: no stored coefficient may be zero.
  bool audit() const {
    for (const auto& [k, c] : terms_)
      if (c.is_zero()) return false;
    return true;
  }

  // Deterministic rendering in key order, e.g. "ab + 2*ba - 1/2*x".
  // Parseable back by the expression grammar.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      Rational a = c;
      if (first) {
        if (a.sign() < 0) {
          out += "-";
          a = -a;
        }
        first = false;
      } else {
        out += a.sign() < 0 ? " - " : " + ";
        if (a.sign() < 0) a = -a;
      }
      if (!a.is_one()) out += a.to_string() + "*";
      out += k.to_string();
    }
    return out;
  }

 private:
  Terms terms_;
};

// Linear extension of a basis-level map f over the terms of a. The result
// type follows f: Key -> Element or Key -> Tensor. f must be total on the
// support of a; instance maps report the offending key themselves.
template <BasisKey K, typename F>
auto linear_extend(F&& f, const Element<K>& a) {
  using R = std::remove_cvref_t<std::invoke_result_t<F&, const K&>>;
  R acc{};
  for (const auto& [k, c] : a.terms()) {
    R part = f(k);
    part *= c;
    acc += part;
  }
  return acc;
}

}  // namespace hopfcalc

#endif  // HOPFCALC_ELEMENT_HPP
