#pragma once

#include "steincalc/exactmat.hpp"

#include <map>
#include <string>

namespace steincalc {

/// Integer Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(std::map<int, Integer> coeffs);

  static LaurentPoly monomial(const Integer& c, int exponent);
  static LaurentPoly t() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;
  int span() const { return is_zero() ? 0 : max_exponent() - min_exponent(); }
  Integer leading_coefficient() const;

  /// c_j == c_{-j} for every j.
  bool is_symmetric() const;
  Integer evaluate_at_one() const;

  /// Symmetric representative up to units +-t^k with positive leading
  /// coefficient. Throws if the span is odd (no symmetric representative).
  LaurentPoly normalized() const;

  /// Exponents multiplied by k.
  LaurentPoly substitute_power(int k) const;

  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Exact division; throws if b does not divide a.
  friend LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

  /// "t^2 - 3*t + 5 - 3*t^-1 + t^-2"
  std::string to_string() const;

 private:
  void trim();
  std::map<int, Integer> coeffs_;
};

LaurentPoly substitute_t_squared(const LaurentPoly& p);

/// Parses the to_string() format (also accepts "1", "-t", "2*t^-3").
LaurentPoly parse_laurent(const std::string& text);

}  // namespace steincalc
