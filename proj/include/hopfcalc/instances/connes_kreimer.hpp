#ifndef HOPFCALC_INSTANCES_CONNES_KREIMER_HPP
#define HOPFCALC_INSTANCES_CONNES_KREIMER_HPP

#include <compare>
#include <string>
#include <vector>

#include "hopfcalc/element.hpp"
#include "hopfcalc/rational.hpp"
#include "hopfcalc/tensor.hpp"

namespace hopfcalc {

// A rooted tree in canonical form: children are stored recursively
// canonicalized and sorted, so equal trees have identical representations
// no matter the construction order. Trees compare by vertex count first,
// then lexicographically on the sorted child list.
class Tree {
 public:
  Tree() : size_(1) {}
  explicit Tree(std::vector<Tree> children);
  Tree(std::initializer_list<Tree> children)
      : Tree(std::vector<Tree>(children)) {}

  int vertex_count() const { return size_; }
  const std::vector<Tree>& children() const { return children_; }

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.size_ == b.size_ && a.children_ == b.children_;
  }
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);

  std::string to_string() const;  // T[], T[T[],T[T[]]], ...

 private:
  std::vector<Tree> children_;
  int size_;
};

// A forest: a multiset of rooted trees, stored sorted; degree = total vertex
// count, the empty forest is the unit.
class ForestKey {
 public:
  ForestKey() = default;
  explicit ForestKey(std::vector<Tree> trees);

  const std::vector<Tree>& trees() const { return trees_; }
  int degree() const { return size_; }
  bool empty() const { return trees_.empty(); }

  // Multiset union (the Connes–Kreimer product on basis keys).
  ForestKey merged_with(const ForestKey& other) const;

  friend bool operator==(const ForestKey&, const ForestKey&) = default;
  friend std::strong_ordering operator<=>(const ForestKey& a, const ForestKey& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.trees_ <=> b.trees_;
  }

  std::string to_string() const;  // "1" or *-joined tree literals

 private:
  std::vector<Tree> trees_;
  int size_ = 0;
};

// The Connes–Kreimer Hopf algebra of rooted forests: product = disjoint
// union, coproduct by admissible cuts,
//   Δ(t) = t⊗1 + 1⊗t + Σ_c P^c(t)⊗R^c(t),
// extended multiplicatively to forests. A cut is a set of edges meeting each
// root-to-leaf path at most once; the pruned part P^c goes in the first
// tensor slot, the part containing the root in the second.
class ConnesKreimerAlgebra {
 public:
  using Key = ForestKey;

  std::string name() const { return "ck"; }
  Key unit() const { return Key(); }

  Rational counit(const Key& k) const {
    return k.empty() ? Rational(1) : Rational(0);
  }

  Tensor<Key> coproduct(const Key& k) const;

  Element<Key> product(const Key& a, const Key& b) const {
    return Element<Key>(a.merged_with(b));
  }

  // All canonical forests with <= bound vertices, in key order.
  std::vector<Key> basis(int degree_bound) const;

  // All canonical trees with exactly n vertices, n >= 1, sorted.
  static std::vector<Tree> trees_of_size(int n);
  // All canonical forests with exactly n vertices, n >= 0, sorted.
  static std::vector<ForestKey> forests_of_size(int n);
};

}  // namespace hopfcalc

#endif  // HOPFCALC_INSTANCES_CONNES_KREIMER_HPP
