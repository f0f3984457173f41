#ifndef HOPFCALC_INSTANCES_SHUFFLE_HPP
#define HOPFCALC_INSTANCES_SHUFFLE_HPP

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

// A word over a lowercase alphabet; degree = length, the empty word is the
// unit. Ordered shortlex so the order refines degree.
class WordKey {
 public:
  WordKey() = default;
  explicit WordKey(std::string letters) : letters_(std::move(letters)) {}

  const std::string& letters() const { return letters_; }
  int degree() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const WordKey&, const WordKey&) = default;
  friend std::strong_ordering operator<=>(const WordKey& a, const WordKey& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

  std::string to_string() const { return letters_.empty() ? "1" : letters_; }

 private:
  std::string letters_;
};

// Shuffle algebra with deconcatenation coproduct:
//   Δ(w) = Σ prefix⊗suffix over all cut positions, u ⧢ v = all interleavings.
class ShuffleAlgebra {
 public:
  using Key = WordKey;

  explicit ShuffleAlgebra(int alphabet_size = 26) : alphabet_size_(alphabet_size) {
    if (alphabet_size_ < 1 || alphabet_size_ > 26)
      throw std::invalid_argument("shuffle: alphabet size must be in 1..26");
  }

  std::string name() const { return "shuffle"; }
  int alphabet_size() const { return alphabet_size_; }
  Key unit() const { return Key(); }

  bool valid_letter(char ch) const {
    return ch >= 'a' && ch < static_cast<char>('a' + alphabet_size_);
  }

  Rational counit(const Key& k) const {
    return k.empty() ? Rational(1) : Rational(0);
  }

  Tensor<Key> coproduct(const Key& k) const {
    Tensor<Key> d;
    const std::string& w = k.letters();
    for (std::size_t i = 0; i <= w.size(); ++i)
      d.add_term({Key(w.substr(0, i)), Key(w.substr(i))}, Rational(1));
    return d;
  }

  Element<Key> product(const Key& a, const Key& b) const {
    return shuffle(a.letters(), b.letters());
  }

  // All words of length <= bound, in shortlex (key) order.
  std::vector<Key> basis(int degree_bound) const {
    std::vector<Key> keys;
    std::vector<std::string> layer = {""};
    keys.emplace_back("");
    for (int len = 1; len <= degree_bound; ++len) {
      std::vector<std::string> next;
      next.reserve(layer.size() * alphabet_size_);
      for (const auto& w : layer)
        for (int i = 0; i < alphabet_size_; ++i)
          next.push_back(w + static_cast<char>('a' + i));
      for (const auto& w : next) keys.emplace_back(w);
      layer = std::move(next);
    }
    return keys;
  }

 private:
  Element<Key> shuffle(const std::string& u, const std::string& v) const {
    const auto memo_key = std::make_pair(u, v);
    auto it = shuffle_memo_.find(memo_key);
    if (it != shuffle_memo_.end()) return it->second;

    Element<Key> r;
    if (u.empty()) {
      r = Element<Key>(Key(v));
    } else if (v.empty()) {
      r = Element<Key>(Key(u));
    } else {
      r += prepend(u[0], shuffle(u.substr(1), v));
      r += prepend(v[0], shuffle(u, v.substr(1)));
    }
    shuffle_memo_.emplace(memo_key, r);
    return r;
  }

  static Element<Key> prepend(char ch, const Element<Key>& a) {
    Element<Key> r;
    for (const auto& [k, c] : a.terms()) r.add_term(Key(ch + k.letters()), c);
    return r;
  }

  int alphabet_size_;
  mutable std::map<std::pair<std::string, std::string>, Element<Key>> shuffle_memo_;
};

// Negative-test fixture: the shuffle instance with the coefficient of a⊗b in
// Δ(ab) perturbed to 2. Counicity survives (the extreme terms are intact);
// coassociativity and the antipode axiom break at degree 3.
class BrokenShuffleAlgebra {
 public:
  using Key = WordKey;

  explicit BrokenShuffleAlgebra(int alphabet_size = 2) : base_(alphabet_size) {
    if (alphabet_size < 2)
      throw std::invalid_argument("broken: needs letters a and b");
  }

  std::string name() const { return "broken"; }
  int alphabet_size() const { return base_.alphabet_size(); }
  Key unit() const { return base_.unit(); }
  bool valid_letter(char ch) const { return base_.valid_letter(ch); }
  Rational counit(const Key& k) const { return base_.counit(k); }

  Tensor<Key> coproduct(const Key& k) const {
    Tensor<Key> d = base_.coproduct(k);
    if (k.letters() == "ab")
      d.add_term({Key("a"), Key("b")}, Rational(1));  // 1 -> 2
    return d;
  }

  Element<Key> product(const Key& a, const Key& b) const {
    return base_.product(a, b);
  }

  std::vector<Key> basis(int degree_bound) const { return base_.basis(degree_bound); }

 private:
  ShuffleAlgebra base_;
};

}  // namespace hopfcalc

#endif  // HOPFCALC_INSTANCES_SHUFFLE_HPP
