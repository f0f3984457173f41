#include "hopfcalc/instances/connes_kreimer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <utility>

namespace hopfcalc {

Tree::Tree(std::vector<Tree> children) : children_(std::move(children)) {
  std::sort(children_.begin(), children_.end());
  size_ = 1;
  for (const auto& c : children_) size_ += c.size_;
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.children_.begin(), a.children_.end(), b.children_.begin(),
      b.children_.end());
}

std::string Tree::to_string() const {
  std::string out = "T[";
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i) out += ",";
    out += children_[i].to_string();
  }
  out += "]";
  return out;
}

ForestKey::ForestKey(std::vector<Tree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end());
  size_ = 0;
  for (const auto& t : trees_) size_ += t.vertex_count();
}

ForestKey ForestKey::merged_with(const ForestKey& other) const {
  std::vector<Tree> all = trees_;
  all.insert(all.end(), other.trees_.begin(), other.trees_.end());
  return ForestKey(std::move(all));
}

std::string ForestKey::to_string() const {
  if (trees_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i) out += "*";
    out += trees_[i].to_string();
  }
  return out;
}

namespace {

// (pruned forest, kept part rooted at the original root) with multiplicity.
using CutTerms = std::map<std::pair<ForestKey, Tree>, long>;

// Enumerates every admissible cut of t, the empty cut included. For each
// child edge: either cut it (the whole child is pruned) or keep it and cut
// admissibly inside the child; this is exactly the one-edge-per-path rule.
CutTerms admissible_cuts(const Tree& t) {
  // Per-child options as (pruned forest, kept child or nothing).
  struct Option {
    std::vector<Tree> pruned;
    std::optional<Tree> kept;
    long count;
  };
  std::vector<std::vector<Option>> options;
  options.reserve(t.children().size());
  for (const auto& child : t.children()) {
    std::vector<Option> opts;
    opts.push_back({{child}, std::nullopt, 1});
    for (const auto& [pr, n] : admissible_cuts(child)) {
      std::vector<Tree> pruned = pr.first.trees();
      opts.push_back({std::move(pruned), pr.second, n});
    }
    options.push_back(std::move(opts));
  }

  CutTerms result;
  std::vector<Tree> pruned_acc;
  std::vector<Tree> kept_children;
  std::function<void(std::size_t, long)> combine = [&](std::size_t i, long mult) {
    if (i == options.size()) {
      result[{ForestKey(pruned_acc), Tree(kept_children)}] += mult;
      return;
    }
    for (const auto& opt : options[i]) {
      const std::size_t pruned_mark = pruned_acc.size();
      pruned_acc.insert(pruned_acc.end(), opt.pruned.begin(), opt.pruned.end());
      if (opt.kept) kept_children.push_back(*opt.kept);
      combine(i + 1, mult * opt.count);
      pruned_acc.resize(pruned_mark);
      if (opt.kept) kept_children.pop_back();
    }
  };
  combine(0, 1);
  return result;
}

Tensor<ForestKey> tree_coproduct(const Tree& t) {
  Tensor<ForestKey> d;
  d.add_term({ForestKey({t}), ForestKey()}, Rational(1));  // t⊗1
  for (const auto& [pr, n] : admissible_cuts(t)) {
    // empty cut contributes 1⊗t here
    d.add_term({pr.first, ForestKey({pr.second})}, Rational(n));
  }
  return d;
}

}  // namespace

Tensor<ForestKey> ConnesKreimerAlgebra::coproduct(const Key& k) const {
  // Δ is multiplicative over the trees of a forest.
  Tensor<Key> acc;
  acc.add_term({Key(), Key()}, Rational(1));
  for (const auto& t : k.trees()) {
    Tensor<Key> part = tree_coproduct(t);
    Tensor<Key> next;
    for (const auto& [ta, ca] : acc.terms())
      for (const auto& [tb, cb] : part.terms())
        next.add_term({ta[0].merged_with(tb[0]), ta[1].merged_with(tb[1])},
                      ca * cb);
    acc = std::move(next);
  }
  return acc;
}

std::vector<Tree> ConnesKreimerAlgebra::trees_of_size(int n) {
  static std::vector<std::vector<Tree>> cache = {{}};  // cache[0] unused
  if (n < 1) return {};
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    std::vector<Tree> trees;
    for (const auto& f : forests_of_size(m - 1)) trees.emplace_back(f.trees());
    std::sort(trees.begin(), trees.end());
    cache.push_back(std::move(trees));
  }
  return cache[n];
}

std::vector<ForestKey> ConnesKreimerAlgebra::forests_of_size(int n) {
  if (n < 0) return {};
  if (n == 0) return {ForestKey()};
  // Nondecreasing sequences of trees summing to n, each tree drawn from the
  // size classes; recursion on (remaining, minimum allowed tree).
  std::vector<ForestKey> out;
  std::vector<Tree> acc;
  std::function<void(int, std::optional<Tree>)> gen =
      [&](int remaining, std::optional<Tree> min_tree) {
        if (remaining == 0) {
          out.emplace_back(acc);
          return;
        }
        for (int s = 1; s <= remaining; ++s) {
          for (const auto& t : trees_of_size(s)) {
            if (min_tree && t < *min_tree) continue;
            acc.push_back(t);
            gen(remaining - s, t);
            acc.pop_back();
          }
        }
      };
  gen(n, std::nullopt);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ForestKey> ConnesKreimerAlgebra::basis(int degree_bound) const {
  std::vector<Key> keys;
  for (int n = 0; n <= degree_bound; ++n) {
    auto layer = forests_of_size(n);
    keys.insert(keys.end(), layer.begin(), layer.end());
  }
  return keys;
}

}  // namespace hopfcalc
