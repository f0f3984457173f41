#ifndef HOPFCALC_INSTANCES_QUASI_SHUFFLE_HPP
#define HOPFCALC_INSTANCES_QUASI_SHUFFLE_HPP

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopfcalc/element.hpp"
#include "hopfcalc/rational.hpp"
#include "hopfcalc/tensor.hpp"

namespace hopfcalc {

// A word of positive integer weights; coalgebra degree = number of letters,
// the empty word is the unit. Ordered shortlex.
class WeightedWordKey {
 public:
  WeightedWordKey() = default;
  explicit WeightedWordKey(std::vector<unsigned> weights)
      : weights_(std::move(weights)) {}

  const std::vector<unsigned>& weights() const { return weights_; }
  int degree() const { return static_cast<int>(weights_.size()); }
  bool empty() const { return weights_.empty(); }

  friend bool operator==(const WeightedWordKey&, const WeightedWordKey&) = default;
  friend std::strong_ordering operator<=>(const WeightedWordKey& a,
                                          const WeightedWordKey& b) {
    if (auto c = a.weights_.size() <=> b.weights_.size(); c != 0) return c;
    return a.weights_ <=> b.weights_;
  }

  std::string to_string() const {
    if (weights_.empty()) return "1";
    std::string out;
    for (unsigned w : weights_) out += "(" + std::to_string(w) + ")";
    return out;
  }

 private:
  std::vector<unsigned> weights_;
};

// Quasi-shuffle algebra with deconcatenation coproduct. The product
// interleaves and additionally merges leading letters by weight addition:
//   au ⧺ bv = a(u ⧺ bv) + b(au ⧺ v) + (a+b)(u ⧺ v).
// The coalgebra grading (by length) is NOT respected by the product (a
// merged letter has length 1 but comes from two length-1 factors), which is
// exactly the situation the antipode machinery must tolerate.
class QuasiShuffleAlgebra {
 public:
  using Key = WeightedWordKey;

  explicit QuasiShuffleAlgebra(unsigned max_weight = 3) : max_weight_(max_weight) {
    if (max_weight_ < 1)
      throw std::invalid_argument("quasishuffle: max weight must be >= 1");
  }

  std::string name() const { return "quasishuffle"; }
  unsigned max_weight() const { return max_weight_; }
  Key unit() const { return Key(); }

  Rational counit(const Key& k) const {
    return k.empty() ? Rational(1) : Rational(0);
  }

  Tensor<Key> coproduct(const Key& k) const {
    Tensor<Key> d;
    const auto& w = k.weights();
    for (std::size_t i = 0; i <= w.size(); ++i) {
      d.add_term({Key(std::vector<unsigned>(w.begin(), w.begin() + i)),
                  Key(std::vector<unsigned>(w.begin() + i, w.end()))},
                 Rational(1));
    }
    return d;
  }

  Element<Key> product(const Key& a, const Key& b) const {
    return quasi_shuffle(a.weights(), b.weights());
  }

  // Words over weights 1..max_weight of length <= bound, shortlex order.
  // The weight cap bounds enumeration only; product and coproduct accept
  // any positive weights (merges routinely exceed the cap).
  std::vector<Key> basis(int degree_bound) const {
    std::vector<Key> keys;
    std::vector<std::vector<unsigned>> layer = {{}};
    keys.emplace_back();
    for (int len = 1; len <= degree_bound; ++len) {
      std::vector<std::vector<unsigned>> next;
      next.reserve(layer.size() * max_weight_);
      for (const auto& w : layer) {
        for (unsigned i = 1; i <= max_weight_; ++i) {
          auto v = w;
          v.push_back(i);
          next.push_back(std::move(v));
        }
      }
      for (const auto& w : next) keys.emplace_back(w);
      layer = std::move(next);
    }
    return keys;
  }

 private:
  using Weights = std::vector<unsigned>;

  Element<Key> quasi_shuffle(const Weights& u, const Weights& v) const {
    const auto memo_key = std::make_pair(u, v);
    auto it = memo_.find(memo_key);
    if (it != memo_.end()) return it->second;

    Element<Key> r;
    if (u.empty()) {
      r = Element<Key>(Key(v));
    } else if (v.empty()) {
      r = Element<Key>(Key(u));
    } else {
      Weights ut(u.begin() + 1, u.end());
      Weights vt(v.begin() + 1, v.end());
      r += prepend(u[0], quasi_shuffle(ut, v));
      r += prepend(v[0], quasi_shuffle(u, vt));
      r += prepend(u[0] + v[0], quasi_shuffle(ut, vt));
    }
    memo_.emplace(memo_key, r);
    return r;
  }

  static Element<Key> prepend(unsigned w, const Element<Key>& a) {
    Element<Key> r;
    for (const auto& [k, c] : a.terms()) {
      Weights v;
      v.reserve(k.weights().size() + 1);
      v.push_back(w);
      v.insert(v.end(), k.weights().begin(), k.weights().end());
      r.add_term(Key(std::move(v)), c);
    }
    return r;
  }

  unsigned max_weight_;
  mutable std::map<std::pair<Weights, Weights>, Element<Key>> memo_;
};

}  // namespace hopfcalc

#endif  // HOPFCALC_INSTANCES_QUASI_SHUFFLE_HPP
