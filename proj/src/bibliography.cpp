#include "steincalc/bibliography.hpp"

namespace steincalc {

const std::map<std::string, Citation>& bibliography() {
  static const std::map<std::string, Citation> table{
      {"neumann-criterion",
       {"W. Neumann, A calculus for plumbing applied to the topology of complex surface "
        "singularities and degenerating complex curves, Trans. AMS 268 (1981)",
        "A closed oriented Seifert fibered 3-manifold is a singularity link iff it fibers over an "
        "orientable base with negative rational Euler number."}},
      {"grauert",
       {"H. Grauert, Ueber Modifikationen und exzeptionelle analytische Mengen, Math. Ann. 146 "
        "(1962)",
        "A plumbing with negative definite intersection matrix is realized by the resolution of a "
        "normal surface singularity."}},
      {"canonical-contact",
       {"C. Caubel, A. Nemethi, P. Popescu-Pampu, Milnor open books and Milnor fillable contact "
        "3-manifolds, Topology 45 (2006); P. Massot, Geodesible contact structures on "
        "3-manifolds, Geom. Topol. 12 (2008)",
        "The Milnor fillable contact structure on a singularity link is unique up to isomorphism; "
        "on a Seifert link with e < 0 it is the unique S^1-invariant transverse class."}},
      {"transverse-open-book",
       {"B. Ozbagci, Explicit horizontal open books on some Seifert fibered 3-manifolds, "
        "Topology Appl. 154 (2007)",
        "The open book with page Sigma_{h,r} and monodromy a product of boundary-parallel twist "
        "powers is transverse to the Seifert fibration."}},
      {"palf-stein",
       {"PALF complement construction for Lefschetz fibrations with sections",
        "Removing a neighbourhood of r disjoint sections of squares -p_i and a regular fibre from "
        "a Lefschetz fibration with homologically essential vanishing cycles leaves a PALF, hence "
        "a Stein filling of the open-book contact structure."}},
      {"hyperelliptic-lf",
       {"R. Gompf, A. Stipsicz, 4-Manifolds and Kirby Calculus, AMS (1999), Exercises 7.3.8 and "
        "8.4.2",
        "CP^2 # (4g+5)(-CP^2) carries a hyperelliptic genus-g Lefschetz fibration whose monodromy "
        "is the square of the chain word."}},
      {"tanaka-sections",
       {"S. Tanaka, On sections of hyperelliptic Lefschetz fibrations, Algebr. Geom. Topol. 12 "
        "(2012)",
        "The hyperelliptic fibration on CP^2 # (4g+5)(-CP^2) has at least 4g+4 disjoint "
        "(-1)-sphere sections."}},
      {"fiber-class",
       {"Fiber class computation for the hyperelliptic fibration on CP^2 # (4g+5)(-CP^2)",
        "[F] = (g+2)h - g e_1 - e_2 - ... - e_{4g+5}."}},
      {"fiber-sum-sections",
       {"R. Gompf, A. Stipsicz, 4-Manifolds and Kirby Calculus, Section 8.2",
        "A fiber sum of simply connected Lefschetz fibrations that admit sections is simply "
        "connected; matched sections sew to sections whose squares add."}},
      {"fintushel-stern",
       {"R. Fintushel, R. Stern, Knots, links, and 4-manifolds, Invent. Math. 134 (1998)",
        "Knot surgery on an essential square-zero torus multiplies the Seiberg-Witten invariant "
        "by Delta_K(t^2) and preserves chi, sigma, and (with simply connected complement) the "
        "homeomorphism type."}},
      {"fibered-knot-surgery",
       {"R. Fintushel, R. Stern, Families of simply connected 4-manifolds with the same "
        "Seiberg-Witten invariants, Topology 43 (2004)",
        "Knot surgery with a genus-k fibered knot on a torus meeting each fibre twice yields a "
        "genus g+2k Lefschetz fibration."}},
      {"surgery-sections",
       {"Disjointness of the surgery torus from the sewn sections",
        "Sections disjoint from the surgery torus survive knot surgery unchanged."}},
      {"kanenobu",
       {"T. Kanenobu, Infinitely many knots with the same polynomial invariant, Proc. AMS 97 "
        "(1986)",
        "For each k >= 2 there are infinitely many genus-k fibered knots with pairwise distinct "
        "Alexander polynomials."}},
      {"novikov",
       {"Novikov additivity of the signature",
        "The signature of a closed 4-manifold split along a closed 3-manifold is the sum of the "
        "signatures of the pieces."}},
      {"boyer",
       {"S. Boyer, Simply-connected 4-manifolds with a given boundary, Trans. AMS 298 (1986)",
        "A fixed form is realized by only finitely many homeomorphism types of simply connected "
        "compact 4-manifolds with given boundary."}},
      {"indefinite-forms",
       {"R. Gompf, A. Stipsicz, 4-Manifolds and Kirby Calculus, Corollary 5.3.12",
        "Fillings with equal rank, signature and zero determinant have isomorphic intersection "
        "forms in the cases used here."}},
      {"korkmaz-lf",
       {"M. Korkmaz, Lefschetz fibrations and an invariant of finitely presented groups, IMRN "
        "(2009)",
        "Sigma_m x S^2 # 8(-CP^2) carries a genus 2m+1 Lefschetz fibration with 2g+10 singular "
        "fibres and monodromy (b_0 ... b_g a^2 b^2)^2."}},
      {"korkmaz-sections",
       {"M. Korkmaz, Lefschetz fibrations with sections on Sigma_m x S^2 # 8(-CP^2)",
        "That fibration has at least two disjoint (-1)-sphere sections."}},
      {"twisted-fiber-sum-pi1",
       {"Twisted fiber sums along an n-th power of a nonseparating twist",
        "The twisted fiber sum of two copies of the Sigma_m x S^2 # 8(-CP^2) fibration can be "
        "chosen with fundamental group Z + Z_n."}},
      {"vk-retained-section",
       {"Seifert-Van Kampen with a retained section",
        "Loops normal to the removed sections and fibre die in the complement via a retained "
        "section, so the filling has the fundamental group of the closed manifold."}},
      {"surgery-pi1",
       {"Seifert-Van Kampen for knot surgery",
        "If every loop on the surgery torus is null-homotopic in the complement, knot surgery "
        "preserves the fundamental group."}},
      {"twisted-sum-homeomorphism",
       {"Knot-surgered twisted fiber sums",
        "For every knot K the knot-surgered twisted fiber sum is homeomorphic to the unsurgered "
        "one."}},
      {"milnor-fiber-b1",
       {"G.-M. Greuel, J. Steenbrink, On the topology of smoothable singularities, Proc. Symp. "
        "Pure Math. 40 (1983)",
        "A Milnor fiber of a normal surface singularity has vanishing first Betti number, so "
        "fillings with infinite H_1 are not Milnor fibers."}},
      {"plumbing-h1",
       {"Standard plumbing fact",
        "H_1 of the boundary of a plumbing tree is Z^(2 sum genus) plus the cokernel of the "
        "intersection matrix."}},
  };
  return table;
}

bool citation_resolves(const std::string& key) {
  return key == kDerivedOracle || bibliography().count(key) > 0;
}

}  // namespace steincalc
