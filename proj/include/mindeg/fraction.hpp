#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace mindeg {

/// Exact nonnegative rational in lowest terms.
struct Fraction
{
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Fraction() = default;
  Fraction(std::uint64_t n, std::uint64_t d) : num(n), den(d)
  {
    auto g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(Fraction const &, Fraction const &) = default;
  friend std::strong_ordering operator<=>(Fraction const &a, Fraction const &b)
  {
    return static_cast<unsigned __int128>(a.num) * b.den <=>
           static_cast<unsigned __int128>(b.num) * a.den;
  }
};

} // namespace mindeg
