#pragma once

// Dehn-twist words acting on first homology of a surface, the two
// monodromy catalogs used by the constructions, and homology bookkeeping in
// CP^2 # n(-CP^2).
//
// Conventions:
//  * Basis of H_1(Sigma_{g,r}) is (a_1, b_1, ..., a_g, b_g, d_1, ..., d_{r-1});
//    the pairing has <b_i, a_i> = +1 and is degenerate on boundary classes.
//  * A twist along c acts by x |-> x + <x, c> c.
//  * Words act left letter first: the matrix of "w1 w2 ... wn" is
//    T_wn * ... * T_w2 * T_w1.

#include "steincalc/exactmat.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace steincalc {

struct SurfaceSpec {
  int genus = 0;
  int boundary = 0;

  std::size_t h1_rank() const {
    return static_cast<std::size_t>(2 * genus + (boundary > 1 ? boundary - 1 : 0));
  }
};

/// Intersection pairing matrix J with <x, y> = x^T J y.
IntMatrix intersection_form(const SurfaceSpec& s);

struct Curve {
  std::string name;
  std::vector<long> homology;
  bool simple = true;
};

struct Letter {
  std::string curve;
  long exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

struct TwistWord {
  SurfaceSpec surface;
  std::vector<Letter> letters;
  std::map<std::string, Curve> curves;  // empty: counting-only word

  /// Number of singular fibres, i.e. the sum of the exponents.
  long letter_count() const;
};

IntMatrix transvection(const Curve& c, const SurfaceSpec& s);
IntMatrix transvection_inverse(const Curve& c, const SurfaceSpec& s);

/// Throws when a letter names a curve missing from the table.
IntMatrix word_action(const TwistWord& w);

/// Parses "c1 c2 c3^2 (c2 c1)^-1". Groups may be nested; exponents may be
/// negative. Adjacent repeats are not merged.
std::vector<Letter> parse_word(const std::string& text);

std::string format_word(const std::vector<Letter>& letters);

/// Chain curves gamma_1..gamma_{2g+1}: gamma_1 = a_1, gamma_{2i} = b_i,
/// gamma_{2i+1} = a_{i+1} - a_i for i < g, gamma_{2g+1} = a_g.
std::map<std::string, Curve> hyperelliptic_chain(int genus);

/// c_1 ... c_{2g} c_{2g+1}^2 c_{2g} ... c_1
TwistWord hyperelliptic_half_word(int genus);
/// The half word squared (global monodromy of X(g,1)).
TwistWord hyperelliptic_word(int genus);

/// (b_0 b_1 ... b_g a^2 b^2)^2 with g = 2m + 1. Without curve data the word
/// is counting-only and word_action throws.
TwistWord korkmaz_word(int m, std::optional<std::map<std::string, Curve>> curves = std::nullopt);

/// Chain-curve consistency: |<gamma_i, gamma_{i+1}>| = 1, <gamma_i, gamma_j> = 0
/// for |i - j| >= 2.
bool chain_consistent(const std::map<std::string, Curve>& chain, const SurfaceSpec& s);

/// chi of a genus-g Lefschetz fibration over S^2 with n singular fibres.
long lf_euler_characteristic(long genus, long singular_fibers);

/// Class in H_2(CP^2 # (4g+5)(-CP^2)) over (h, e_1, ..., e_{4g+5}).
struct HomologyClassX {
  std::vector<long> coefficients;

  friend bool operator==(const HomologyClassX&, const HomologyClassX&) = default;
};

HomologyClassX hyperplane_class(int genus);
/// e_i for 1 <= i <= 4g+5.
HomologyClassX exceptional_class(int genus, int i);
HomologyClassX operator+(const HomologyClassX& a, const HomologyClassX& b);
HomologyClassX operator-(const HomologyClassX& a, const HomologyClassX& b);

/// [F] = (g+2) h - g e_1 - e_2 - ... - e_{4g+5}
HomologyClassX fiber_class(int genus);

/// diag(+1, -1, ..., -1)
long pair(const HomologyClassX& x, const HomologyClassX& y);

/// Number of disjoint (-1)-sphere sections e_2, ..., e_{4g+5}.
long section_count(int genus);

}  // namespace steincalc
