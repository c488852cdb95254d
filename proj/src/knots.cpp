#include "steincalc/knots.hpp"

#include <algorithm>

namespace steincalc {

SeifertMatrixK::SeifertMatrixK(std::string name, IntMatrix v) : name_(std::move(name)), v_(std::move(v)) {
  if (!v_.is_square()) throw Error("Seifert matrix '" + name_ + "' is not square");
  if (v_.rows() % 2 != 0) throw Error("Seifert matrix '" + name_ + "' has odd size");
  const Integer d = determinant(v_ - v_.transpose());
  if (d != 1)
    throw Error("Seifert matrix '" + name_ + "': det(V - V^T) = " + d.get_str() + ", expected 1");
}

SeifertMatrixK trefoil() { return SeifertMatrixK("trefoil", IntMatrix{{-1, 1}, {0, -1}}); }

SeifertMatrixK figure_eight() { return SeifertMatrixK("figure-eight", IntMatrix{{1, 1}, {0, -1}}); }

SeifertMatrixK hopf_chain(const std::vector<int>& signs) {
  IntMatrix v(signs.size(), signs.size());
  std::string name = "hopf(";
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw Error("hopf_chain: signs must be +-1");
    v(i, i) = signs[i];
    if (i + 1 < signs.size()) v(i, i + 1) = 1;
    name += signs[i] > 0 ? '+' : '-';
  }
  return SeifertMatrixK(name + ")", std::move(v));
}

LaurentPoly alexander_raw(const SeifertMatrixK& k) {
  const IntMatrix& v = k.matrix();
  const std::size_t n = v.rows();
  if (n == 0) return LaurentPoly(1);
  const LaurentPoly t = LaurentPoly::t();
  std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = LaurentPoly::monomial(v(i, j), 0) - LaurentPoly::monomial(v(j, i), 1);

  // Fraction-free elimination over Z[t]; every division is exact.
  int sign = 1;
  LaurentPoly prev(1);
  for (std::size_t c = 0; c + 1 < n; ++c) {
    if (a[c][c].is_zero()) {
      std::size_t r = c + 1;
      while (r < n && a[r][c].is_zero()) ++r;
      if (r == n) return LaurentPoly();
      std::swap(a[c], a[r]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        a[i][j] = divide_exact(a[i][j] * a[c][c] - a[i][c] * a[c][j], prev);
      a[i][c] = LaurentPoly();
    }
    prev = a[c][c];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

LaurentPoly alexander(const SeifertMatrixK& k) { return alexander_raw(k).normalized(); }

FiberedCertificate fibered_certificate(const SeifertMatrixK& k) {
  FiberedCertificate c;
  const LaurentPoly d = alexander(k);
  c.monic = abs(d.leading_coefficient()) == 1;
  c.full_span = d.span() == 2 * k.genus();
  if (!c.monic)
    c.reasons.push_back("leading coefficient " + d.leading_coefficient().get_str() + " is not +-1");
  if (!c.full_span)
    c.reasons.push_back("span " + std::to_string(d.span()) + " differs from 2*genus = " +
                        std::to_string(2 * k.genus()));
  c.passes = c.monic && c.full_span;
  return c;
}

SeifertMatrixK connected_sum(const SeifertMatrixK& a, const SeifertMatrixK& b) {
  const std::size_t n = a.matrix().rows(), m = b.matrix().rows();
  IntMatrix v(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v(i, j) = a.matrix()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) v(n + i, n + j) = b.matrix()(i, j);
  return SeifertMatrixK(a.name() + "#" + b.name(), std::move(v));
}

FamilyReport family_report(const std::vector<SeifertMatrixK>& family, int genus) {
  FamilyReport r;
  r.expected_genus = genus;
  if (family.empty()) {
    r.failures.push_back("family required");
    return r;
  }
  for (const auto& k : family) {
    r.names.push_back(k.name());
    r.polynomials.push_back(alexander(k));
    if (k.genus() != genus)
      r.failures.push_back(k.name() + ": genus " + std::to_string(k.genus()) + ", expected " +
                           std::to_string(genus));
    const auto cert = fibered_certificate(k);
    for (const auto& why : cert.reasons) r.failures.push_back(k.name() + ": " + why);
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (r.polynomials[i] == r.polynomials[j]) r.collisions.emplace_back(i, j);
  r.passes = r.failures.empty() && r.collisions.empty();
  return r;
}

std::vector<SeifertMatrixK> demo_family(int genus, std::size_t count) {
  if (genus < 1) throw Error("demo_family: genus must be >= 1");
  const std::size_t bands = static_cast<std::size_t>(2 * genus);
  if (bands > 30) throw Error("demo_family: genus too large");
  std::vector<SeifertMatrixK> out;
  std::vector<LaurentPoly> seen;
  for (unsigned long mask = 0; mask < (1UL << bands) && out.size() < count; ++mask) {
    std::vector<int> signs(bands);
    for (std::size_t i = 0; i < bands; ++i) signs[i] = (mask >> (bands - 1 - i)) & 1UL ? 1 : -1;
    auto k = hopf_chain(signs);
    auto p = alexander(k);
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
    seen.push_back(std::move(p));
    out.push_back(std::move(k));
  }
  if (out.size() < count) throw Error("demo_family: not enough distinct Hopf chains at this genus");
  return out;
}

}  // namespace steincalc
