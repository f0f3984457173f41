#ifndef HOPFCALC_TENSOR_HPP
#define HOPFCALC_TENSOR_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "hopfcalc/element.hpp"
#include "hopfcalc/rational.hpp"

namespace hopfcalc {

// Finitely supported formal sum of fixed-arity tuples of basis keys: an
// element of C^{⊗k}. All stored tuples have length == arity(); zero
// coefficients are never stored. The zero tensor is arity-less (arity() == 0)
// so zeros of every tensor power compare equal, matching the way the math
// identifies them in statements like "Δ̄ⁿ(x) = 0".
template <BasisKey K>
class Tensor {
 public:
  using Key = K;
  using Tuple = std::vector<K>;
  using Terms = std::map<Tuple, Rational>;

  Tensor() = default;
  explicit Tensor(Tuple t, const Rational& c = Rational(1)) {
    if (t.empty()) throw std::invalid_argument("Tensor: empty tuple");
    if (!c.is_zero()) {
      arity_ = t.size();
      terms_.emplace(std::move(t), c);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t arity() const { return arity_; }  // 0 iff zero tensor
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const& { return terms_; }
  // rvalue overload returns by value so `for (… : f(x).terms())` stays safe
  Terms terms() && { return std::move(terms_); }

  Rational coefficient(const Tuple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational() : it->second;
  }

  void add_term(const Tuple& t, const Rational& c) {
    if (c.is_zero()) return;
    if (terms_.empty()) {
      if (t.empty()) throw std::invalid_argument("Tensor: empty tuple");
      arity_ = t.size();
    } else if (t.size() != arity_) {
      throw std::invalid_argument("Tensor: tuple length != arity");
    }
    auto [it, fresh] = terms_.try_emplace(t, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    if (terms_.empty()) arity_ = 0;
  }

  Tensor& operator+=(const Tensor& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
  }
  Tensor& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      arity_ = 0;
    } else {
      for (auto& [t, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Rational& s, Tensor a) { return a *= s; }
  Tensor operator-() const {
    Tensor r(*this);
    for (auto& [t, c] : r.terms_) c = -c;
    return r;
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

  bool audit() const {
    if (terms_.empty()) return arity_ == 0;
    for (const auto& [t, c] : terms_)
      if (c.is_zero() || t.size() != arity_) return false;
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : terms_) {
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
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += "⊗";
        out += t[i].to_string();
      }
    }
    return out;
  }

 private:
  std::size_t arity_ = 0;
  Terms terms_;
};

// Bilinear extension of tuple concatenation; coefficients multiply.
template <BasisKey K>
Tensor<K> tensor_product(const Tensor<K>& a, const Tensor<K>& b) {
  Tensor<K> r;
  for (const auto& [ta, ca] : a.terms()) {
    for (const auto& [tb, cb] : b.terms()) {
      typename Tensor<K>::Tuple t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      r.add_term(std::move(t), ca * cb);
    }
  }
  return r;
}

template <BasisKey K>
Tensor<K> to_tensor(const Element<K>& a) {
  Tensor<K> r;
  for (const auto& [k, c] : a.terms()) r.add_term({k}, c);
  return r;
}

// Identification of C^{⊗1} with C; accepts the zero tensor of any arity.
template <BasisKey K>
Element<K> to_element(const Tensor<K>& t) {
  if (t.is_zero()) return Element<K>();
  if (t.arity() != 1)
    throw std::invalid_argument("to_element: tensor arity != 1");
  Element<K> r;
  for (const auto& [tup, c] : t.terms()) r.add_term(tup[0], c);
  return r;
}

namespace detail {

template <BasisKey K>
void check_position(const Tensor<K>& t, std::size_t position) {
  if (position < 1 || position > t.arity())
    throw std::out_of_range("apply_at: position out of range");
}

}  // namespace detail

// Applies a basis-level map in one tensor slot (1-based), identity elsewhere.
// Three shapes of f are supported, mirroring how structure maps act on a
// slot: Key -> Tensor splices the result in, Key -> Element keeps the arity,
// Key -> Rational contracts the slot away (the counit action).
template <BasisKey K, typename F>
  requires std::convertible_to<std::invoke_result_t<F&, const K&>, Tensor<K>>
Tensor<K> apply_at(F&& f, const Tensor<K>& t, std::size_t position) {
  detail::check_position(t, position);
  Tensor<K> r;
  for (const auto& [tup, c] : t.terms()) {
    Tensor<K> image = f(tup[position - 1]);
    for (const auto& [mid, cm] : image.terms()) {
      typename Tensor<K>::Tuple out;
      out.reserve(tup.size() - 1 + mid.size());
      out.insert(out.end(), tup.begin(), tup.begin() + (position - 1));
      out.insert(out.end(), mid.begin(), mid.end());
      out.insert(out.end(), tup.begin() + position, tup.end());
      r.add_term(std::move(out), c * cm);
    }
  }
  return r;
}

template <BasisKey K, typename F>
  requires std::convertible_to<std::invoke_result_t<F&, const K&>, Element<K>>
Tensor<K> apply_at(F&& f, const Tensor<K>& t, std::size_t position) {
  return apply_at(
      [&](const K& k) { return to_tensor<K>(f(k)); }, t, position);
}

// Counit-style slot action: scalar times the tensor with the slot removed.
// Needs arity >= 2 so the result is still a tensor.
template <BasisKey K, typename F>
  requires std::convertible_to<std::invoke_result_t<F&, const K&>, Rational>
Tensor<K> apply_at(F&& f, const Tensor<K>& t, std::size_t position) {
  detail::check_position(t, position);
  if (t.arity() < 2)
    throw std::invalid_argument("apply_at: cannot contract an arity-1 tensor");
  Tensor<K> r;
  for (const auto& [tup, c] : t.terms()) {
    Rational s = f(tup[position - 1]);
    if (s.is_zero()) continue;
    typename Tensor<K>::Tuple out;
    out.reserve(tup.size() - 1);
    out.insert(out.end(), tup.begin(), tup.begin() + (position - 1));
    out.insert(out.end(), tup.begin() + position, tup.end());
    r.add_term(std::move(out), c * s);
  }
  return r;
}

}  // namespace hopfcalc

#endif  // HOPFCALC_TENSOR_HPP
