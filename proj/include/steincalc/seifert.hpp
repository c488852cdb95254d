#pragma once

// Seifert invariants of star-shaped plumbings and of the open books whose
// monodromy is a product of boundary-parallel twist powers.
//
// Sign convention: invariants are read from the reduced plumbing (every leg
// weight <= -2). The rational Euler number is e = e0 + sum(beta_i / alpha_i)
// and the manifold is a singularity link iff e < 0.

#include "steincalc/exactmat.hpp"
#include "steincalc/plumbing.hpp"

#include <optional>
#include <string>
#include <vector>

namespace steincalc {

struct SeifertLeg {
  long alpha = 0;  // multiplicity, >= 2
  long beta = 0;   // 0 < beta < alpha

  friend auto operator<=>(const SeifertLeg&, const SeifertLeg&) = default;
};

/// Normalized Seifert invariants; legs are kept sorted.
struct SeifertData {
  int base_genus = 0;
  long e0 = 0;
  std::vector<SeifertLeg> legs;

  SeifertData() = default;
  SeifertData(int base_genus, long e0, std::vector<SeifertLeg> legs);

  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

std::string to_string(const SeifertData& s);

Rational euler_number(const SeifertData& s);

bool is_singularity_link(const SeifertData& s);

struct ContactFlags {
  bool milnor_fillable = false;
  bool unique_transverse_invariant_class = false;

  friend bool operator==(const ContactFlags&, const ContactFlags&) = default;
};

/// Both flags follow the sign of the Euler number: the canonical contact
/// structure exists and equals the S^1-invariant transverse class exactly
/// when e < 0. Cited classification, nothing is computed beyond e.
ContactFlags canonical_contact_flag(const SeifertData& s);

/// alpha/beta of the negative continued fraction [a_1, ..., a_s], a_j >= 2.
SeifertLeg leg_from_continued_fraction(const std::vector<long>& a);

/// Reads Seifert invariants off a star-shaped plumbing whose legs have
/// weights <= -2. Without an explicit centre, the unique vertex of degree
/// >= 3 is used, else the unique positive-genus vertex, else the first
/// vertex in insertion order.
SeifertData star_to_seifert(const PlumbingGraph& g, std::optional<int> center = std::nullopt);

struct OpenBookDesc {
  int page_genus = 0;
  std::vector<long> powers;  // twist power along each boundary-parallel curve

  std::size_t boundary_count() const { return powers.size(); }
};

void validate(const OpenBookDesc& ob);

/// Seifert data of the open-book manifold. Multiplicity-1 boundaries add no
/// leg but lower e0 by one.
SeifertData openbook_manifold(const OpenBookDesc& ob);

/// First homology of the open-book manifold, computed independently of any
/// plumbing as the cokernel of the variation map
///   H_1(page, boundary) -> H_1(page),  a |-> phi(a) - a.
BoundaryHomology openbook_homology(const OpenBookDesc& ob);

/// The variation matrix itself (columns indexed by the relative basis).
IntMatrix openbook_variation(const OpenBookDesc& ob);

}  // namespace steincalc
