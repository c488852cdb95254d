#include "steincalc/laurent.hpp"

#include <cctype>
#include <sstream>

namespace steincalc {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly::LaurentPoly(std::map<int, Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

LaurentPoly LaurentPoly::monomial(const Integer& c, int exponent) {
  return LaurentPoly(std::map<int, Integer>{{exponent, c}});
}

void LaurentPoly::trim() { std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; }); }

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (is_zero()) throw Error("LaurentPoly: zero polynomial has no exponents");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) throw Error("LaurentPoly: zero polynomial has no exponents");
  return coeffs_.rbegin()->first;
}

Integer LaurentPoly::leading_coefficient() const {
  return is_zero() ? Integer(0) : coeffs_.rbegin()->second;
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : coeffs_)
    if (coefficient(-e) != c) return false;
  return true;
}

Integer LaurentPoly::evaluate_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return *this;
  const int lo = min_exponent(), hi = max_exponent();
  if ((lo + hi) % 2 != 0) throw Error("LaurentPoly::normalized: odd span " + to_string());
  LaurentPoly p = shifted(-(lo + hi) / 2);
  return p.leading_coefficient() < 0 ? -p : p;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) return LaurentPoly(std::map<int, Integer>{{0, evaluate_at_one()}});
  std::map<int, Integer> out;
  for (const auto& [e, c] : coeffs_) out[e * k] += c;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  std::map<int, Integer> out;
  for (const auto& [e, c] : coeffs_) out[e + k] = c;
  return LaurentPoly(std::move(out));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) coeffs_[e] += c;
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) coeffs_[e] -= c;
  trim();
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r = a;
  for (auto& [e, c] : r.coeffs_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<int, Integer> out;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) out[ea + eb] += ca * cb;
  return LaurentPoly(std::move(out));
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error("divide_exact: division by zero polynomial");
  LaurentPoly rem = a;
  std::map<int, Integer> q;
  const int bhi = b.max_exponent(), blo = b.min_exponent();
  const Integer& lead = b.coeffs_.rbegin()->second;
  while (!rem.is_zero()) {
    const int rhi = rem.max_exponent();
    if (rhi - bhi < rem.min_exponent() - blo) break;
    const Integer& rc = rem.coeffs_.rbegin()->second;
    if (rc % lead != 0) break;
    const Integer c = rc / lead;
    q[rhi - bhi] += c;
    rem -= LaurentPoly::monomial(c, rhi - bhi) * b;
  }
  if (!rem.is_zero()) throw Error("divide_exact: " + b.to_string() + " does not divide " + a.to_string());
  return LaurentPoly(std::move(q));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const int e = it->first;
    Integer c = it->second;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    if (e == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      os << 't';
      if (e != 1) os << '^' << e;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly substitute_t_squared(const LaurentPoly& p) { return p.substitute_power(2); }

LaurentPoly parse_laurent(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error("parse_laurent: empty input");
  std::map<int, Integer> out;
  std::size_t i = 0;
  auto fail = [&]() -> LaurentPoly { throw Error("parse_laurent: cannot parse '" + text + "'"); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Integer c = start == i ? Integer(1) : Integer(s.substr(start, i - start));
    int e = 0;
    const bool star = i < s.size() && s[i] == '*';
    if (star) ++i;
    if (i < s.size() && s[i] == 't') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t es = i;
        if (i < s.size() && s[i] == '-') ++i;
        const std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (digits == i) return fail();
        e = std::stoi(s.substr(es, i - es));
      }
    } else if (start == i || star) {
      return fail();
    }
    out[e] += sign * c;
    if (i < s.size() && s[i] != '+' && s[i] != '-') return fail();
  }
  return LaurentPoly(std::move(out));
}

}  // namespace steincalc
