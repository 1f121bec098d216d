// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OFL_RATIONAL_H_
#define OFL_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ofl {

// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  // Throws ContractViolation when `den` is zero.
  Rational(long num, long den);

  explicit Rational(mpq_class value);

  // Accepts "p/q" or "p" with an optional leading '-'. No whitespace, no
  // decimal points, q > 0. Throws ParseError otherwise.
  static Rational parse(std::string_view text);

  // Canonical text: "p" for integers, "p/q" otherwise.
  std::string str() const;

  // Fixed-point rendering with `digits` fractional digits (rounded to
  // nearest through a double; only for human-readable output).
  std::string decimal(int digits = 6) const;

  double to_double() const { return value_.get_d(); }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  // Smallest integer >= *this / largest integer <= *this.
  long ceil() const;
  long floor() const;

  const mpq_class& raw() const { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  // Throws ContractViolation on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

inline Rational midpoint(const Rational& a, const Rational& b) {
  return (a + b) / Rational(2);
}

std::ostream& operator<<(std::ostream& os, const Rational& x);

struct RationalHash {
  std::size_t operator()(const Rational& x) const;
};

}  // namespace ofl

#endif  // OFL_RATIONAL_H_
