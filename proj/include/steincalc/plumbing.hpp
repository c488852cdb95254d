#pragma once

// Plumbing trees of disk/circle bundles over surfaces and the moves that
// preserve the oriented boundary 3-manifold.

#include "steincalc/exactmat.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace steincalc {

struct PlumbingVertex {
  int id = 0;
  long weight = 0;  // Euler number of the bundle
  int genus = 0;    // genus of the base surface

  friend bool operator==(const PlumbingVertex&, const PlumbingVertex&) = default;
};

/// A connected plumbing tree with +1 edges. Vertex ids are stable; vertices
/// created by moves receive ids that were never used in the graph's history.
/// The empty graph (boundary S^3) is allowed.
class PlumbingGraph {
 public:
  PlumbingGraph() = default;
  /// Validates: unique ids, genus >= 0, no loops or multi-edges, connected tree.
  PlumbingGraph(std::vector<PlumbingVertex> vertices, std::vector<std::pair<int, int>> edges);

  const std::vector<PlumbingVertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  bool contains(int id) const;
  /// Position in insertion order; this is the row index in the intersection matrix.
  std::size_t index_of(int id) const;
  const PlumbingVertex& vertex(int id) const;
  std::vector<int> neighbors(int id) const;
  std::size_t degree(int id) const;
  bool adjacent(int a, int b) const;
  int next_id() const { return next_id_; }

  friend bool operator==(const PlumbingGraph& a, const PlumbingGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  friend class GraphEditor;
  std::vector<PlumbingVertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
  int next_id_ = 0;
};

/// Raised when a move does not apply to the current graph.
class MoveError : public Error {
 public:
  using Error::Error;
};

enum class MoveKind {
  BlowUpAtVertex,   // args: {v}
  BlowUpOnEdge,     // args: {a, b}
  BlowDown,         // args: {v}
  AbsorbZeroLeaf,   // args: {leaf}
};

struct Move {
  MoveKind kind;
  std::vector<int> args;

  friend bool operator==(const Move&, const Move&) = default;
};

using MoveScript = std::vector<Move>;

std::string to_string(MoveKind kind);
MoveKind move_kind_from_string(const std::string& s);

// Star graphs. `powers` holds the multiplicities p_1..p_r.

/// Central vertex (weight 0, genus h) joined to r leaves of weight p_i.
PlumbingGraph star_graph_left(int genus, const std::vector<long>& powers);

/// Central vertex (weight -r, genus h); leg i is a chain of p_i - 1 vertices
/// of weight -2. A p_i = 1 leg is empty but still counted in the central
/// weight; a message is appended to `warnings` when it is non-null.
PlumbingGraph star_graph_right(int genus, const std::vector<long>& powers,
                               std::vector<std::string>* warnings = nullptr);

/// Rows follow vertex insertion order.
IntMatrix intersection_matrix(const PlumbingGraph& g);

PlumbingGraph reverse_orientation(const PlumbingGraph& g);

PlumbingGraph blow_up_at_vertex(const PlumbingGraph& g, int v);
PlumbingGraph blow_up_on_edge(const PlumbingGraph& g, int a, int b);
PlumbingGraph blow_down(const PlumbingGraph& g, int v);
/// Removes a genus-0, weight-0 leaf together with its genus-0 neighbour of
/// degree <= 2 (a cancelling pair). The neighbour's other neighbour keeps
/// its weight.
PlumbingGraph absorb_zero_leaf(const PlumbingGraph& g, int leaf);

PlumbingGraph apply_move(const PlumbingGraph& g, const Move& m);
/// Throws MoveError naming the offending position.
PlumbingGraph replay(const PlumbingGraph& g, const MoveScript& script);

struct BoundaryHomology {
  int rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, ascending

  friend bool operator==(const BoundaryHomology&, const BoundaryHomology&) = default;
};

std::string to_string(const BoundaryHomology& h);

/// Presentation matrix of H_1 of the boundary: free part Z^(2 sum genus)
/// plus coker of the intersection matrix.
BoundaryHomology boundary_homology(const PlumbingGraph& g);

/// True iff the intersection matrix is negative definite, i.e. the boundary
/// is realized as a singularity link.
bool grauert_check(const PlumbingGraph& g);

/// A move script taking star_graph_left(h, p) to a graph isomorphic to
/// star_graph_right(h, p). Each leg of weight p is blown up p times along
/// the edge next to the leaf, then the resulting 0-leaf is absorbed.
MoveScript figure1_witness(int genus, const std::vector<long>& powers);

/// Isomorphism of labelled trees (labels = weight, genus), ignoring ids.
bool isomorphic(const PlumbingGraph& a, const PlumbingGraph& b);

}  // namespace steincalc
