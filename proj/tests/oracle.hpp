#pragma once

// Reference computations that share no code with the library. Used to pin
// frozen values and to cross-check the exact routines on random input.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<long long>>;

// Laplace expansion along the first row.
inline long long cofactor_det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const long long term = m[0][j] * cofactor_det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

// Cyclic Jacobi rotations; returns the eigenvalues of a real symmetric matrix.
inline std::vector<double> jacobi_eigenvalues(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<double>(m[i][j]);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-22) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  return ev;
}

struct Counts {
  int positive = 0, negative = 0, zero = 0;
};

inline Counts eigen_signs(const Mat& m) {
  Counts c;
  for (double x : jacobi_eigenvalues(m)) {
    if (x > 1e-9) ++c.positive;
    else if (x < -1e-9) ++c.negative;
    else ++c.zero;
  }
  return c;
}

// Intersection form of a neighbourhood of a genus-h fibre of square 0 and r
// disjoint sections of square s, each meeting the fibre once.
inline Mat fibre_plus_sections(int r, long long s) {
  Mat m(static_cast<std::size_t>(r) + 1, std::vector<long long>(static_cast<std::size_t>(r) + 1, 0));
  for (int i = 1; i <= r; ++i) {
    m[0][static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)][0] = 1;
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = s;
  }
  return m;
}

// Mayer-Vietoris on X = V u Z with chi(boundary) = 0 and Novikov additivity.
// Z deformation retracts onto a genus-h surface with r spheres attached at
// one point each.
inline std::pair<long, long> filling_chi_sigma(long chi_x, long sigma_x, int h, int r, long long s) {
  const long chi_z = (2 - 2L * h) + 2L * r - r;
  const Counts c = eigen_signs(fibre_plus_sections(r, s));
  return {chi_x - chi_z, sigma_x - (c.positive - c.negative)};
}

// Cell count for a fiber sum of two genus-g fibrations: remove a fibre
// neighbourhood from each and glue along Sigma_g x S^1.
inline long fiber_sum_chi(long chi_a, long chi_b, long g) { return chi_a + chi_b - 2 * (2 - 2 * g); }

// chi and sigma of CP^2 # n(-CP^2) counted from its cells and its diagonal form.
inline std::pair<long, long> rational_surface(long n) { return {3 + n, 1 - n}; }

// det(V - t V^T) evaluated at an integer t.
inline long long alexander_at(const Mat& v, long long t) {
  const std::size_t n = v.size();
  Mat a(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = v[i][j] - t * v[j][i];
  return cofactor_det(a);
}

// Frozen values computed once with an external computer algebra system.
namespace frozen {
// Coefficients from t^2 down to t^-2.
inline const std::vector<std::vector<long>> hopf_chain_genus2 = {
    {1, -1, 1, -1, 1},   // ----
    {1, -3, 3, -3, 1},   // ---+
    {1, -5, 7, -5, 1},   // --+-
    {1, -3, 5, -3, 1},   // --++
    {1, -7, 13, -7, 1},  // -+-+
};
inline const std::vector<long> trefoil_sum = {1, -2, 3, -2, 1};
inline const std::vector<long> trefoil_figure_eight = {1, -4, 5, -4, 1};
inline const std::vector<long> figure_eight_sum = {1, -6, 11, -6, 1};
}  // namespace frozen

}  // namespace oracle
