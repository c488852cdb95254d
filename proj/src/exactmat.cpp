#include "steincalc/exactmat.hpp"

#include <algorithm>
#include <sstream>

namespace steincalc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix n = *this;
  for (auto& x : n.data_) x = -x;
  return n;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("IntMatrix product: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("IntMatrix sum: dimension mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j).get_str();
    }
    os << ']';
  }
  return os << ']';
}

namespace {

// Smallest nonzero |entry| in the block [t.., t..], lowest (row, col) on ties.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        pr = i;
        pc = j;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<Integer> diag(n, Integer(0));

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(a, t, pr, pc)) break;

    for (;;) {
      a.swap_rows(t, pr);
      left.swap_rows(t, pr);
      a.swap_cols(t, pc);
      right.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -q);
        left.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, -q);
        right.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }

      if (clean) {
        // Divisibility: fold an offending row into the pivot row and retry.
        bool divides = true;
        for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
          for (std::size_t j = t + 1; j < a.cols(); ++j)
            if (a(i, j) % a(t, t) != 0) {
              a.add_row_multiple(t, i, 1);
              left.add_row_multiple(t, i, 1);
              divides = false;
              break;
            }
        if (divides) break;
      }
      find_pivot(a, t, pr, pc);
    }

    if (a(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
    diag[t] = a(t, t);
  }
  return SmithForm{std::move(diag), std::move(left), std::move(right)};
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Integer> leading_principal_minors(const IntMatrix& m) {
  if (!m.is_square()) throw Error("leading_principal_minors: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<Integer> minors;
  minors.reserve(n);
  // Without pivoting, the Bareiss pivots are exactly the leading minors.
  IntMatrix a = m;
  Integer prev = 1;
  std::size_t k = 0;
  for (; k < n; ++k) {
    minors.push_back(a(k, k));
    if (a(k, k) == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  // minors holds D_1..D_{k+1} here
  for (k += 2; k <= n; ++k) {
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
    minors.push_back(determinant(sub));
  }
  return minors;
}

std::size_t rank(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  return static_cast<std::size_t>(
      std::count_if(snf.diagonal.begin(), snf.diagonal.end(),
                    [](const Integer& d) { return d != 0; }));
}

Inertia inertia(const IntMatrix& m) {
  if (!m.is_symmetric()) throw Error("inertia: matrix is not symmetric");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));

  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  Inertia out;
  while (!active.empty()) {
    auto diag_it = std::find_if(active.begin(), active.end(),
                                [&](std::size_t i) { return a[i][i] != 0; });
    if (diag_it != active.end()) {
      const std::size_t p = *diag_it;
      const Rational d = a[p][p];
      (d > 0 ? out.positive : out.negative)++;
      active.erase(diag_it);
      for (std::size_t r : active)
        for (std::size_t c : active) a[r][c] -= a[r][p] * a[p][c] / d;
      continue;
    }

    std::size_t pi = n, pj = n;
    for (std::size_t x = 0; x < active.size() && pi == n; ++x)
      for (std::size_t y = x + 1; y < active.size(); ++y)
        if (a[active[x]][active[y]] != 0) {
          pi = active[x];
          pj = active[y];
          break;
        }
    if (pi == n) {
      out.zero += static_cast<int>(active.size());
      break;
    }

    // Hyperbolic pair [[0,b],[b,0]]: one positive and one negative square.
    out.positive++;
    out.negative++;
    const Rational b = a[pi][pj];
    std::erase(active, pi);
    std::erase(active, pj);
    for (std::size_t r : active)
      for (std::size_t c : active)
        a[r][c] -= (a[r][pi] * a[pj][c] + a[r][pj] * a[pi][c]) / b;
  }
  return out;
}

int signature(const IntMatrix& m) {
  const Inertia in = inertia(m);
  return in.positive - in.negative;
}

bool is_negative_definite(const IntMatrix& m) {
  if (!m.is_symmetric()) throw Error("is_negative_definite: matrix is not symmetric");
  const auto minors = leading_principal_minors(m);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const int want = (k % 2 == 0) ? -1 : 1;  // sign of D_{k+1}
    if (sgn(minors[k]) != want) return false;
  }
  return true;
}

}  // namespace steincalc
