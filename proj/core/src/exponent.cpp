#include "multinorm/exponent.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "multinorm/error.hpp"

namespace multinorm {

Exponent::Exponent(std::int64_t num, std::int64_t den) {
  require(den != 0, ErrorKind::InvalidInput, "exponent: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  require(num >= den, ErrorKind::InvalidInput,
          "exponent must be >= 1, got " + std::to_string(num) + "/" + std::to_string(den));
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Exponent Exponent::inf() {
  Exponent e;
  e.inf_ = true;
  e.num_ = 1;
  e.den_ = 0;
  return e;
}

Exponent Exponent::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(c)));
  if (s == "inf" || s == "infinity" || s == "oo") return inf();
  require(!s.empty(), ErrorKind::InvalidInput, "exponent: empty string");

  auto parse_int = [&](std::string_view d) -> std::int64_t {
    require(!d.empty() && d.size() <= 15, ErrorKind::InvalidInput, "exponent: bad integer '" + s + "'");
    std::int64_t v = 0;
    for (char c : d) {
      require(c >= '0' && c <= '9', ErrorKind::InvalidInput, "exponent: bad digit in '" + s + "'");
      v = v * 10 + (c - '0');
    }
    return v;
  };

  if (auto slash = s.find('/'); slash != std::string::npos)
    return Exponent(parse_int(std::string_view(s).substr(0, slash)),
                    parse_int(std::string_view(s).substr(slash + 1)));
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::int64_t den = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Exponent(parse_int(digits.empty() ? "0" : digits), den);
  }
  return Exponent(parse_int(s), 1);
}

double Exponent::value() const {
  if (inf_) return std::numeric_limits<double>::infinity();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

double Exponent::reciprocal() const {
  if (inf_) return 0.0;
  return static_cast<double>(den_) / static_cast<double>(num_);
}

Exponent Exponent::conjugate() const {
  if (inf_) return Exponent(1, 1);
  if (num_ == den_) return inf();
  return Exponent(num_, num_ - den_);
}

std::string Exponent::str() const {
  if (inf_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  if (a.inf_ || b.inf_) return static_cast<int>(a.inf_) <=> static_cast<int>(b.inf_);
  // num/den compared by cross multiplication; values stay far below overflow
  return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

}  // namespace multinorm
