#pragma once

// Invariant records of closed 4-manifolds and of the Stein fillings cut out
// of them, propagated through fiber sums, knot surgery and excision.
//
// Nothing here computes a fundamental group or a Seiberg-Witten invariant.
// pi_1 is a tag set by catalog rules (each with a citation key), and the
// distinguisher is the product of knot-surgery multipliers Delta_K(t^2)
// relative to the unsurgered manifold.

#include "steincalc/knots.hpp"
#include "steincalc/laurent.hpp"
#include "steincalc/seifert.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace steincalc {

enum class Pi1Kind { Trivial, ZPlusZn, ProductSurface, Unknown };

struct Pi1Tag {
  Pi1Kind kind = Pi1Kind::Unknown;
  long parameter = 0;  // n for Z + Z_n, m for pi_1(Sigma_m)
  std::string citation;

  std::string to_string() const;
  friend bool operator==(const Pi1Tag&, const Pi1Tag&) = default;
};

struct SectionGroup {
  long square = 0;
  long count = 0;

  friend bool operator==(const SectionGroup&, const SectionGroup&) = default;
};

/// One construction step. Inputs form a DAG (a fiber sum has two parents).
struct ProvenanceNode {
  std::string op;
  nlohmann::json params;
  std::vector<std::shared_ptr<const ProvenanceNode>> inputs;
  std::vector<std::string> notes;
};

using Provenance = std::shared_ptr<const ProvenanceNode>;

struct ManifoldRecord {
  std::string name;
  long euler_char = 0;
  long signature = 0;
  std::optional<long> fiber_genus;
  std::vector<SectionGroup> sections;
  Pi1Tag pi1;
  LaurentPoly sw_distinguisher{1};
  Provenance provenance;

  long section_total() const;
};

struct FillingRecord {
  ManifoldRecord base;
  SeifertData boundary;
  BoundaryHomology boundary_h1;
  bool stein_flag = false;
  std::string stein_citation;
  bool simply_connected = false;
  std::string simply_connected_citation;
  std::optional<long> det_intersection_form;  // empty: not determined
  std::string det_justification;
  long removed_sections = 0;
  std::vector<std::string> warnings;
};

struct FiberSumTwist {
  bool twisted = false;
  long n = 0;

  static FiberSumTwist untwisted() { return {}; }
  static FiberSumTwist n_twist(long n) { return {true, n}; }
};

/// CP^2 # (4g+5)(-CP^2) with its hyperelliptic genus-g fibration.
ManifoldRecord make_X_g1(int genus);

/// Sigma_m x S^2 # 8(-CP^2) with its genus 2m+1 fibration.
ManifoldRecord make_W(int m);

ManifoldRecord fiber_sum(const ManifoldRecord& a, const ManifoldRecord& b, FiberSumTwist twist);

/// Fintushel-Stern knot surgery along the torus built by the fiber sum.
ManifoldRecord knot_surgery(const ManifoldRecord& m, const SeifertMatrixK& knot,
                            bool torus_null_homotopic);

/// The Z-graph removed by excision: central (0, genus h) with r legs of
/// weight -p.
PlumbingGraph excised_plumbing(int genus, long p, long r);

/// Removes a neighbourhood of r sections (all of square -p) union a regular
/// fibre. At least one section must remain.
FillingRecord excise_filling(const ManifoldRecord& m, long r);

struct DistinctnessReport {
  bool all_distinct = false;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
  std::string verdict;
};

DistinctnessReport distinguisher_distinct(const std::vector<LaurentPoly>& family);
DistinctnessReport distinguisher_distinct(const std::vector<ManifoldRecord>& family);
DistinctnessReport distinguisher_distinct(const std::vector<FillingRecord>& family);

/// Rebuilds a record from its provenance log alone.
ManifoldRecord replay(const Provenance& p);
FillingRecord replay_filling(const Provenance& p);

/// True if some node of the DAG has the given op.
bool provenance_contains(const Provenance& p, const std::string& op);
/// Ops of the DAG's root nodes (nodes without inputs).
std::vector<std::string> provenance_roots(const Provenance& p);

nlohmann::json to_json(const Provenance& p);
nlohmann::json to_json(const ManifoldRecord& m);
nlohmann::json to_json(const FillingRecord& f);
nlohmann::json to_json(const SeifertData& s);
nlohmann::json to_json(const BoundaryHomology& h);

Provenance provenance_from_json(const nlohmann::json& j);

}  // namespace steincalc
