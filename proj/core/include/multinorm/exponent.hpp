#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace multinorm {

// An exponent in [1, inf], stored as an exact rational or the value inf.
class Exponent {
 public:
  Exponent() = default;
  Exponent(std::int64_t num, std::int64_t den = 1);

  static Exponent inf();
  // Accepts "inf", "infinity", integers, "a/b" and finite decimals ("1.5").
  static Exponent parse(std::string_view text);

  bool is_inf() const { return inf_; }
  bool is_one() const { return !inf_ && num_ == den_; }
  bool is_two() const { return !inf_ && num_ == 2 * den_; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double value() const;
  // 1/p, with 1/inf = 0.
  double reciprocal() const;
  Exponent conjugate() const;
  std::string str() const;

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.inf_ == b.inf_ && (a.inf_ || (a.num_ == b.num_ && a.den_ == b.den_));
  }
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

 private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
  bool inf_ = false;
};

}  // namespace multinorm
