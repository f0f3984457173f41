#ifndef HOPFCALC_RATIONAL_HPP
#define HOPFCALC_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace hopfcalc {

// Exact rational scalar over arbitrary-precision integers, always kept in
// lowest terms with a positive denominator. All arithmetic is exact; there
// is no floating point anywhere in the library.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit so `3 * x` reads naturally
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  // Accepts "p" or "p/q" with an optional leading '-', digits only.
  static Rational from_string(const std::string& s) {
    std::size_t i = 0;
    auto digits = [&](std::size_t& j) {
      std::size_t start = j;
      while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
      return j > start;
    };
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (!digits(i)) throw std::invalid_argument("Rational: bad literal '" + s + "'");
    if (i < s.size()) {
      if (s[i] != '/') throw std::invalid_argument("Rational: bad literal '" + s + "'");
      ++i;
      if (!digits(i) || i != s.size())
        throw std::invalid_argument("Rational: bad literal '" + s + "'");
    }
    mpq_class v(s, 10);
    if (v.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
  }

  static Rational binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "p" when the denominator is 1, else "p/q".
  std::string to_string() const { return v_.get_str(); }
  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;  // canonical by construction
};

}  // namespace hopfcalc

#endif  // HOPFCALC_RATIONAL_HPP
