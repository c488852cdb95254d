#pragma once

// Seifert matrices, Alexander polynomials, and fixed-genus knot families
// with pairwise distinct Alexander polynomials.

#include "steincalc/exactmat.hpp"
#include "steincalc/laurent.hpp"

#include <string>
#include <utility>
#include <vector>

namespace steincalc {

/// Seifert matrix V of a knot: even size 2k and det(V - V^T) = 1.
class SeifertMatrixK {
 public:
  SeifertMatrixK() = default;  // unknot
  SeifertMatrixK(std::string name, IntMatrix v);

  const std::string& name() const { return name_; }
  const IntMatrix& matrix() const { return v_; }
  int genus() const { return static_cast<int>(v_.rows() / 2); }

 private:
  std::string name_ = "unknot";
  IntMatrix v_;
};

SeifertMatrixK trefoil();
SeifertMatrixK figure_eight();

/// Linear plumbing of Hopf bands; entry i of `signs` is the diagonal entry
/// (-1 or +1) of band i. Hopf plumbings are fibered, so every such knot is
/// a genus (size/2) fibered knot. Size must be even.
SeifertMatrixK hopf_chain(const std::vector<int>& signs);

/// det(V - t V^T) normalized to the symmetric representative with positive
/// leading coefficient.
LaurentPoly alexander(const SeifertMatrixK& k);

/// det(V - t V^T) before normalization.
LaurentPoly alexander_raw(const SeifertMatrixK& k);

struct FiberedCertificate {
  bool passes = false;
  bool monic = false;
  bool full_span = false;
  std::vector<std::string> reasons;
};

/// Necessary condition for fiberedness: monic Alexander polynomial with
/// span 2 * genus. Fiberedness itself is never decided here.
FiberedCertificate fibered_certificate(const SeifertMatrixK& k);

SeifertMatrixK connected_sum(const SeifertMatrixK& a, const SeifertMatrixK& b);

struct FamilyReport {
  bool passes = false;
  int expected_genus = 0;
  std::vector<std::string> names;
  std::vector<LaurentPoly> polynomials;
  std::vector<std::string> failures;
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
};

FamilyReport family_report(const std::vector<SeifertMatrixK>& family, int genus);

/// `count` genus-k Hopf-chain knots with pairwise distinct Alexander
/// polynomials, taken in binary order of sign patterns (bit set -> +1).
std::vector<SeifertMatrixK> demo_family(int genus, std::size_t count = 5);

}  // namespace steincalc
