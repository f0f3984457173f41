#ifndef HOPFCALC_INSTANCES_POLYNOMIAL_HPP
#define HOPFCALC_INSTANCES_POLYNOMIAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "hopfcalc/element.hpp"
#include "hopfcalc/rational.hpp"
#include "hopfcalc/tensor.hpp"

namespace hopfcalc {

// Monomial x^n; degree = exponent.
class PolynomialKey {
 public:
  explicit PolynomialKey(unsigned e = 0) : exp_(e) {}

  unsigned exponent() const { return exp_; }
  int degree() const { return static_cast<int>(exp_); }

  friend auto operator<=>(const PolynomialKey&, const PolynomialKey&) = default;

  std::string to_string() const {
    if (exp_ == 0) return "1";
    if (exp_ == 1) return "x";
    return "x^" + std::to_string(exp_);
  }

 private:
  unsigned exp_;
};

// The binomial bialgebra on k[x] with x primitive:
//   Δ(xⁿ) = Σₖ C(n,k) xᵏ⊗xⁿ⁻ᵏ,  ε(xⁿ) = [n=0],  xᵖ·x^q = x^{p+q}.
class PolynomialAlgebra {
 public:
  using Key = PolynomialKey;

  std::string name() const { return "poly"; }
  Key unit() const { return Key(0); }

  Rational counit(const Key& k) const {
    return k.exponent() == 0 ? Rational(1) : Rational(0);
  }

  Tensor<Key> coproduct(const Key& k) const {
    Tensor<Key> d;
    const unsigned n = k.exponent();
    for (unsigned i = 0; i <= n; ++i)
      d.add_term({Key(i), Key(n - i)}, Rational::binomial(n, i));
    return d;
  }

  Element<Key> product(const Key& a, const Key& b) const {
    return Element<Key>(Key(a.exponent() + b.exponent()));
  }

  std::vector<Key> basis(int degree_bound) const {
    std::vector<Key> keys;
    for (int n = 0; n <= degree_bound; ++n)
      keys.emplace_back(static_cast<unsigned>(n));
    return keys;
  }
};

}  // namespace hopfcalc

#endif  // HOPFCALC_INSTANCES_POLYNOMIAL_HPP
