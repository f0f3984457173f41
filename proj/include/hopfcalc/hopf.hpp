#ifndef HOPFCALC_HOPF_HPP
#define HOPFCALC_HOPF_HPP

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "hopfcalc/coalgebra.hpp"
#include "hopfcalc/element.hpp"
#include "hopfcalc/rational.hpp"
#include "hopfcalc/report.hpp"
#include "hopfcalc/tensor.hpp"

namespace hopfcalc {

// A bialgebra adds a basis-level product to the coalgebra contract. The
// algebra unit is the coaugmentation key.
template <typename H>
concept BialgebraLike = CoalgebraLike<H> &&
    requires(const H& h, const typename H::Key& k) {
      { h.product(k, k) } -> std::convertible_to<Element<typename H::Key>>;
    };

// Bilinear extension of the basis-level product.
template <BialgebraLike H>
Element<KeyOf<H>> multiply(const H& h, const Element<KeyOf<H>>& a,
                           const Element<KeyOf<H>>& b) {
  Element<KeyOf<H>> r;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      Element<KeyOf<H>> p = h.product(ka, kb);
      p *= ca * cb;
      r += p;
    }
  }
  return r;
}

// mⁿ: left-to-right fold of the product across the slots of a tensor,
// linearly extended. Arity 1 is the identity fold.
template <BialgebraLike H>
Element<KeyOf<H>> multiply_fold(const H& h, const Tensor<KeyOf<H>>& t) {
  Element<KeyOf<H>> r;
  for (const auto& [tup, c] : t.terms()) {
    Element<KeyOf<H>> acc(tup[0]);
    for (std::size_t i = 1; i < tup.size(); ++i)
      acc = multiply(h, acc, Element<KeyOf<H>>(tup[i]));
    acc *= c;
    r += acc;
  }
  return r;
}

// Componentwise product on C⊗C: (a⊗b)·(c⊗d) = ac ⊗ bd, bilinearly.
template <BialgebraLike H>
Tensor<KeyOf<H>> tensor2_multiply(const H& h, const Tensor<KeyOf<H>>& s,
                                  const Tensor<KeyOf<H>>& t) {
  if (s.is_zero() || t.is_zero()) return Tensor<KeyOf<H>>();
  if (s.arity() != 2 || t.arity() != 2)
    throw std::invalid_argument("tensor2_multiply: arity-2 tensors expected");
  Tensor<KeyOf<H>> r;
  for (const auto& [ts, cs] : s.terms()) {
    for (const auto& [tt, ct] : t.terms()) {
      Element<KeyOf<H>> left = h.product(ts[0], tt[0]);
      Element<KeyOf<H>> right = h.product(ts[1], tt[1]);
      const Rational c = cs * ct;
      for (const auto& [kl, cl] : left.terms())
        for (const auto& [kr, cr] : right.terms())
          r.add_term({kl, kr}, c * cl * cr);
    }
  }
  return r;
}

// A linear endomorphism given by a basis-level rule, memoized per key.
// Evaluation is deterministic; the cache is invisible to results.
template <BasisKey K>
class EndoMap {
 public:
  using Rule = std::function<Element<K>(const K&)>;

  explicit EndoMap(Rule rule) : rule_(std::move(rule)) {}

  const Element<K>& operator()(const K& k) const {
    auto it = memo_.find(k);
    if (it == memo_.end()) it = memo_.emplace(k, rule_(k)).first;
    return it->second;
  }

  Element<K> apply(const Element<K>& a) const {
    return linear_extend([&](const K& k) { return (*this)(k); }, a);
  }

 private:
  Rule rule_;
  mutable std::map<K, Element<K>> memo_;
};

template <BialgebraLike H>
EndoMap<KeyOf<H>> identity_endomap(const H&) {
  return EndoMap<KeyOf<H>>(
      [](const KeyOf<H>& k) { return Element<KeyOf<H>>(k); });
}

// uε, the unit of the convolution algebra.
template <BialgebraLike H>
EndoMap<KeyOf<H>> unit_counit_endomap(const H& h) {
  return EndoMap<KeyOf<H>>([&h](const KeyOf<H>& k) {
    return Element<KeyOf<H>>(h.unit(), h.counit(k));
  });
}

// Convolution (f∗g)(a) = m ∘ (f⊗g) ∘ Δ (a) = Σ f(a₍₁₎) g(a₍₂₎).
template <BialgebraLike H>
Element<KeyOf<H>> convolve(const H& h, const EndoMap<KeyOf<H>>& f,
                           const EndoMap<KeyOf<H>>& g,
                           const Element<KeyOf<H>>& a) {
  Element<KeyOf<H>> r;
  for (const auto& [tup, c] : coproduct(h, a).terms()) {
    Element<KeyOf<H>> p = multiply(h, f(tup[0]), g(tup[1]));
    p *= c;
    r += p;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Antipode algorithms. All three extend S linearly across the decomposition
// H = im u ⊕ ker ε, with S(u(1)) = u(1).

// Series form: S(x) = -x + Σ_{n>=1} (-1)^{n+1} mⁿ Δ̄ⁿ(x) on ker ε. The sum
// runs until Δ̄ⁿ(x) = 0 with a hard cap at the max degree of the support, so
// the conilpotency guarantee is exercised at runtime instead of assumed.
template <BialgebraLike H>
Element<KeyOf<H>> antipode_series(const H& h, const Element<KeyOf<H>>& a) {
  Element<KeyOf<H>> acc = unit_element(h, counit(h, a));
  Element<KeyOf<H>> x = project_ker_counit(h, a);
  if (x.is_zero()) return acc;
  acc -= x;
  const int cap = x.max_degree();
  Tensor<KeyOf<H>> d = reduced_coproduct(h, x);
  int n = 1;
  while (!d.is_zero()) {
    if (n >= cap)
      throw std::runtime_error(
          "antipode series did not terminate within the degree bound: "
          "instance is not connected cofiltered");
    Element<KeyOf<H>> m = multiply_fold(h, d);
    if (n % 2 == 1)
      acc += m;  // (-1)^{n+1}
    else
      acc -= m;
    d = detail::reduced_power_step(h, d);
    ++n;
  }
  return acc;
}

namespace detail {

// Shared recursion for the two one-sided forms. On a connected cofiltered
// instance the degree strictly drops into (0, deg) along Δ̄; a non-dropping
// leg is reported as an invalid instance instead of recursing.
template <BialgebraLike H>
const Element<KeyOf<H>>& antipode_rec_key(const H& h, const KeyOf<H>& k,
                                          bool left,
                                          std::map<KeyOf<H>, Element<KeyOf<H>>>& memo) {
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;

  Element<KeyOf<H>> value;
  if (k == h.unit()) {
    value = Element<KeyOf<H>>(k);
  } else {
    if (!h.counit(k).is_zero())
      throw std::domain_error("antipode recursion: basis key " + k.to_string() +
                              " is neither the unit nor in ker ε");
    // S(x) = -x - Σ S(x')x''  (left)  /  -x - Σ x'S(x'')  (right)
    value = -Element<KeyOf<H>>(k);
    for (const auto& [t, c] : reduced_coproduct_key(h, k).terms()) {
      const KeyOf<H>& rec = left ? t[0] : t[1];
      if (rec.degree() <= 0 || rec.degree() >= k.degree())
        throw std::runtime_error(
            "antipode recursion does not descend in degree at " + k.to_string() +
            ": instance is not connected cofiltered");
      const Element<KeyOf<H>>& s = antipode_rec_key(h, rec, left, memo);
      Element<KeyOf<H>> p = left ? multiply(h, s, Element<KeyOf<H>>(t[1]))
                                 : multiply(h, Element<KeyOf<H>>(t[0]), s);
      p *= c;
      value -= p;
    }
  }
  return memo.emplace(k, std::move(value)).first->second;
}

template <BialgebraLike H>
Element<KeyOf<H>> antipode_recursive(const H& h, const Element<KeyOf<H>>& a,
                                     bool left) {
  std::map<KeyOf<H>, Element<KeyOf<H>>> memo;
  Element<KeyOf<H>> acc = unit_element(h, counit(h, a));
  for (const auto& [k, c] : project_ker_counit(h, a).terms()) {
    Element<KeyOf<H>> s = antipode_rec_key(h, k, left, memo);
    s *= c;
    acc += s;
  }
  return acc;
}

}  // namespace detail

// Recursion on degree: S(x) = -x - Σ S(x')x''.
template <BialgebraLike H>
Element<KeyOf<H>> antipode_recursive_left(const H& h, const Element<KeyOf<H>>& a) {
  return detail::antipode_recursive(h, a, /*left=*/true);
}

// Mirror recursion: S(x) = -x - Σ x'S(x'').
template <BialgebraLike H>
Element<KeyOf<H>> antipode_recursive_right(const H& h, const Element<KeyOf<H>>& a) {
  return detail::antipode_recursive(h, a, /*left=*/false);
}

enum class AntipodeAlgorithm { kSeries, kRecursiveLeft, kRecursiveRight };

// The antipode as a memoized endomorphism. The recursive variants keep one
// recursion cache for the whole map's lifetime.
template <BialgebraLike H>
EndoMap<KeyOf<H>> antipode_endomap(const H& h, AntipodeAlgorithm alg) {
  using K = KeyOf<H>;
  switch (alg) {
    case AntipodeAlgorithm::kSeries:
      return EndoMap<K>(
          [&h](const K& k) { return antipode_series(h, Element<K>(k)); });
    case AntipodeAlgorithm::kRecursiveLeft:
    case AntipodeAlgorithm::kRecursiveRight: {
      const bool left = alg == AntipodeAlgorithm::kRecursiveLeft;
      auto memo = std::make_shared<std::map<K, Element<K>>>();
      return EndoMap<K>([&h, left, memo](const K& k) {
        if (k == h.unit()) return Element<K>(k);
        return detail::antipode_rec_key(h, k, left, *memo);
      });
    }
  }
  throw std::logic_error("unreachable");
}

// Checks S∗id = id∗S = uε pointwise on the basis up to the bound. The
// comparison target is ε(b)·u(1) directly, which is what uε evaluates to.
template <BialgebraLike H>
CheckReport verify_antipode(const H& h, const EndoMap<KeyOf<H>>& s,
                            int degree_bound) {
  CheckReport rep{"antipode", degree_bound, {}};
  EndoMap<KeyOf<H>> id = identity_endomap(h);
  for (const auto& b : h.basis(degree_bound)) {
    Element<KeyOf<H>> be(b);
    Element<KeyOf<H>> expected = unit_element(h, h.counit(b));
    Element<KeyOf<H>> lhs = convolve(h, s, id, be);
    Element<KeyOf<H>> rhs = convolve(h, id, s, be);
    if (lhs != expected)
      rep.violations.push_back({b.to_string(), "S∗id gives " + lhs.to_string()});
    if (rhs != expected)
      rep.violations.push_back({b.to_string(), "id∗S gives " + rhs.to_string()});
  }
  return rep;
}

// Bialgebra compatibility: Δ and ε are algebra morphisms on basis pairs with
// deg(b)+deg(c) <= bound, plus unit laws and associativity of the product on
// the same range.
template <BialgebraLike H>
CheckReport check_bialgebra(const H& h, int degree_bound) {
  CheckReport rep{"bialgebra", degree_bound, {}};
  using K = KeyOf<H>;
  const K u = h.unit();
  const auto keys = h.basis(degree_bound);

  for (const auto& b : keys) {
    Element<K> be(b);
    if (multiply(h, Element<K>(u), be) != be || multiply(h, be, Element<K>(u)) != be)
      rep.violations.push_back({b.to_string(), "unit law fails"});
  }

  for (const auto& b : keys) {
    for (const auto& c : keys) {
      if (b.degree() + c.degree() > degree_bound) continue;
      const std::string pair = b.to_string() + " , " + c.to_string();
      Element<K> bc = h.product(b, c);
      if (!(counit(h, bc) == h.counit(b) * h.counit(c)))
        rep.violations.push_back({pair, "ε(b·c) != ε(b)ε(c)"});
      Tensor<K> lhs = coproduct(h, bc);
      Tensor<K> rhs = tensor2_multiply(h, h.coproduct(b), h.coproduct(c));
      if (lhs != rhs)
        rep.violations.push_back({pair, "Δ(b·c) != Δ(b)·Δ(c)"});
    }
  }

  for (const auto& b : keys) {
    for (const auto& c : keys) {
      if (b.degree() + c.degree() > degree_bound) continue;
      for (const auto& d : keys) {
        if (b.degree() + c.degree() + d.degree() > degree_bound) continue;
        Element<K> left = multiply(h, h.product(b, c), Element<K>(d));
        Element<K> right = multiply(h, Element<K>(b), h.product(c, d));
        if (left != right)
          rep.violations.push_back(
              {b.to_string() + " , " + c.to_string() + " , " + d.to_string(),
               "product associativity fails"});
      }
    }
  }
  return rep;
}

}  // namespace hopfcalc

#endif  // HOPFCALC_HOPF_HPP
