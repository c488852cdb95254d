#include "steincalc/plumbing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace steincalc {

namespace {

std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace

PlumbingGraph::PlumbingGraph(std::vector<PlumbingVertex> vertices,
                             std::vector<std::pair<int, int>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& v = vertices_[i];
    if (v.genus < 0) throw Error("plumbing: negative genus at vertex " + std::to_string(v.id));
    if (!index.emplace(v.id, i).second)
      throw Error("plumbing: duplicate vertex id " + std::to_string(v.id));
    next_id_ = std::max(next_id_, v.id + 1);
  }
  std::vector<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges_) {
    if (!index.count(a) || !index.count(b))
      throw Error("plumbing: edge references unknown vertex");
    if (a == b) throw Error("plumbing: self-loop at vertex " + std::to_string(a));
    auto key = ordered(a, b);
    if (std::find(seen.begin(), seen.end(), key) != seen.end())
      throw Error("plumbing: multi-edge between " + std::to_string(a) + " and " +
                  std::to_string(b));
    seen.push_back(key);
  }
  if (vertices_.empty()) {
    if (!edges_.empty()) throw Error("plumbing: edges without vertices");
    return;
  }
  if (edges_.size() + 1 != vertices_.size())
    throw Error("plumbing: graph is not a tree (cycle or disconnected)");

  // Union-find connectivity; with |E| = |V| - 1 this also rules out cycles.
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : edges_) {
    auto ra = find(index[a]), rb = find(index[b]);
    if (ra == rb) throw Error("plumbing: graph contains a cycle");
    parent[ra] = rb;
  }
}

bool PlumbingGraph::contains(int id) const {
  return std::any_of(vertices_.begin(), vertices_.end(),
                     [id](const PlumbingVertex& v) { return v.id == id; });
}

std::size_t PlumbingGraph::index_of(int id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  throw Error("plumbing: no vertex with id " + std::to_string(id));
}

const PlumbingVertex& PlumbingGraph::vertex(int id) const { return vertices_[index_of(id)]; }

std::vector<int> PlumbingGraph::neighbors(int id) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == id) out.push_back(b);
    else if (b == id) out.push_back(a);
  }
  return out;
}

std::size_t PlumbingGraph::degree(int id) const { return neighbors(id).size(); }

bool PlumbingGraph::adjacent(int a, int b) const {
  const auto key = ordered(a, b);
  return std::any_of(edges_.begin(), edges_.end(),
                     [&](const auto& e) { return ordered(e.first, e.second) == key; });
}

// Mutable access for the move implementations. Moves preserve tree-ness by
// construction; the result is revalidated through the public constructor.
class GraphEditor {
 public:
  explicit GraphEditor(const PlumbingGraph& g)
      : vertices_(g.vertices_), edges_(g.edges_), next_id_(g.next_id_) {}

  PlumbingVertex& at(int id) {
    for (auto& v : vertices_)
      if (v.id == id) return v;
    throw MoveError("plumbing: no vertex with id " + std::to_string(id));
  }
  int add_vertex(long weight, int genus) {
    const int id = next_id_++;
    vertices_.push_back({id, weight, genus});
    return id;
  }
  void remove_vertex(int id) {
    std::erase_if(vertices_, [id](const PlumbingVertex& v) { return v.id == id; });
    std::erase_if(edges_, [id](const auto& e) { return e.first == id || e.second == id; });
  }
  void add_edge(int a, int b) { edges_.emplace_back(a, b); }
  void remove_edge(int a, int b) {
    const auto key = ordered(a, b);
    std::erase_if(edges_, [&](const auto& e) { return ordered(e.first, e.second) == key; });
  }
  PlumbingGraph finish() && {
    PlumbingGraph g(std::move(vertices_), std::move(edges_));
    g.next_id_ = std::max(g.next_id_, next_id_);
    return g;
  }

 private:
  std::vector<PlumbingVertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
  int next_id_;
};

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::BlowUpAtVertex: return "blow_up_at_vertex";
    case MoveKind::BlowUpOnEdge: return "blow_up_on_edge";
    case MoveKind::BlowDown: return "blow_down";
    case MoveKind::AbsorbZeroLeaf: return "absorb_zero_leaf";
  }
  return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
  for (auto k : {MoveKind::BlowUpAtVertex, MoveKind::BlowUpOnEdge, MoveKind::BlowDown,
                 MoveKind::AbsorbZeroLeaf})
    if (to_string(k) == s) return k;
  throw Error("unknown move '" + s + "'");
}

PlumbingGraph star_graph_left(int genus, const std::vector<long>& powers) {
  if (powers.empty()) throw Error("star_graph_left: empty multiplicity tuple");
  if (genus < 0) throw Error("star_graph_left: negative genus");
  std::vector<PlumbingVertex> vs{{0, 0, genus}};
  std::vector<std::pair<int, int>> es;
  int id = 1;
  for (long p : powers) {
    if (p < 1) throw Error("star_graph_left: multiplicities must be positive");
    vs.push_back({id, p, 0});
    es.emplace_back(0, id);
    ++id;
  }
  return PlumbingGraph(std::move(vs), std::move(es));
}

PlumbingGraph star_graph_right(int genus, const std::vector<long>& powers,
                               std::vector<std::string>* warnings) {
  if (powers.empty()) throw Error("star_graph_right: empty multiplicity tuple");
  if (genus < 0) throw Error("star_graph_right: negative genus");
  const long r = static_cast<long>(powers.size());
  std::vector<PlumbingVertex> vs{{0, -r, genus}};
  std::vector<std::pair<int, int>> es;
  int id = 1;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    const long p = powers[i];
    if (p < 1) throw Error("star_graph_right: multiplicities must be positive");
    if (p == 1 && warnings)
      warnings->push_back("leg " + std::to_string(i + 1) +
                          " has multiplicity 1 and is empty; it still counts in the central weight");
    int prev = 0;
    for (long j = 0; j + 1 < p; ++j) {
      vs.push_back({id, -2, 0});
      es.emplace_back(prev, id);
      prev = id++;
    }
  }
  return PlumbingGraph(std::move(vs), std::move(es));
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
  IntMatrix m(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) m(i, i) = g.vertices()[i].weight;
  for (const auto& [a, b] : g.edges()) {
    const auto i = g.index_of(a), j = g.index_of(b);
    m(i, j) = 1;
    m(j, i) = 1;
  }
  return m;
}

PlumbingGraph reverse_orientation(const PlumbingGraph& g) {
  GraphEditor ed(g);
  for (const auto& v : g.vertices()) ed.at(v.id).weight = -v.weight;
  return std::move(ed).finish();
}

PlumbingGraph blow_up_at_vertex(const PlumbingGraph& g, int v) {
  if (!g.contains(v)) throw MoveError("blow_up_at_vertex: no vertex " + std::to_string(v));
  GraphEditor ed(g);
  ed.at(v).weight -= 1;
  const int e = ed.add_vertex(-1, 0);
  ed.add_edge(v, e);
  return std::move(ed).finish();
}

PlumbingGraph blow_up_on_edge(const PlumbingGraph& g, int a, int b) {
  if (!g.contains(a) || !g.contains(b) || !g.adjacent(a, b))
    throw MoveError("blow_up_on_edge: no edge " + std::to_string(a) + "-" + std::to_string(b));
  GraphEditor ed(g);
  ed.at(a).weight -= 1;
  ed.at(b).weight -= 1;
  ed.remove_edge(a, b);
  const int e = ed.add_vertex(-1, 0);
  ed.add_edge(a, e);
  ed.add_edge(e, b);
  return std::move(ed).finish();
}

PlumbingGraph blow_down(const PlumbingGraph& g, int v) {
  if (!g.contains(v)) throw MoveError("blow_down: no vertex " + std::to_string(v));
  const auto& vx = g.vertex(v);
  if (vx.weight != -1) throw MoveError("blow_down: vertex " + std::to_string(v) + " has weight " +
                                       std::to_string(vx.weight) + ", not -1");
  if (vx.genus != 0) throw MoveError("blow_down: vertex " + std::to_string(v) + " has positive genus");
  const auto nb = g.neighbors(v);
  if (nb.size() > 2) throw MoveError("blow_down: vertex " + std::to_string(v) + " has degree > 2");

  GraphEditor ed(g);
  ed.remove_vertex(v);
  for (int n : nb) ed.at(n).weight += 1;
  if (nb.size() == 2) {
    if (nb[0] == nb[1] || g.adjacent(nb[0], nb[1]))
      throw MoveError("blow_down: joining neighbours would create a loop or multi-edge");
    ed.add_edge(nb[0], nb[1]);
  }
  return std::move(ed).finish();
}

PlumbingGraph absorb_zero_leaf(const PlumbingGraph& g, int leaf) {
  if (!g.contains(leaf)) throw MoveError("absorb_zero_leaf: no vertex " + std::to_string(leaf));
  const auto& lx = g.vertex(leaf);
  if (lx.weight != 0 || lx.genus != 0)
    throw MoveError("absorb_zero_leaf: vertex " + std::to_string(leaf) +
                    " is not a genus-0 vertex of weight 0");
  const auto nb = g.neighbors(leaf);
  if (nb.size() != 1) throw MoveError("absorb_zero_leaf: vertex " + std::to_string(leaf) + " is not a leaf");
  const int partner = nb.front();
  if (g.vertex(partner).genus != 0)
    throw MoveError("absorb_zero_leaf: neighbour of the leaf has positive genus");
  if (g.degree(partner) > 2)
    throw MoveError("absorb_zero_leaf: neighbour has degree > 2; the tree would split");
  GraphEditor ed(g);
  ed.remove_vertex(leaf);
  ed.remove_vertex(partner);
  return std::move(ed).finish();
}

PlumbingGraph apply_move(const PlumbingGraph& g, const Move& m) {
  auto need = [&](std::size_t n) {
    if (m.args.size() != n)
      throw MoveError(to_string(m.kind) + ": expected " + std::to_string(n) + " argument(s)");
  };
  switch (m.kind) {
    case MoveKind::BlowUpAtVertex: need(1); return blow_up_at_vertex(g, m.args[0]);
    case MoveKind::BlowUpOnEdge: need(2); return blow_up_on_edge(g, m.args[0], m.args[1]);
    case MoveKind::BlowDown: need(1); return blow_down(g, m.args[0]);
    case MoveKind::AbsorbZeroLeaf: need(1); return absorb_zero_leaf(g, m.args[0]);
  }
  throw MoveError("unknown move");
}

PlumbingGraph replay(const PlumbingGraph& g, const MoveScript& script) {
  PlumbingGraph cur = g;
  for (std::size_t i = 0; i < script.size(); ++i) {
    try {
      cur = apply_move(cur, script[i]);
    } catch (const Error& e) {
      throw MoveError("move " + std::to_string(i) + ": " + e.what());
    }
  }
  return cur;
}

std::string to_string(const BoundaryHomology& h) {
  std::ostringstream os;
  os << "Z^" << h.rank;
  for (const auto& t : h.torsion) os << " + Z/" << t.get_str();
  return os.str();
}

BoundaryHomology boundary_homology(const PlumbingGraph& g) {
  BoundaryHomology h;
  for (const auto& v : g.vertices()) h.rank += 2 * v.genus;
  const SmithForm snf = smith_normal_form(intersection_matrix(g));
  for (const auto& d : snf.diagonal) {
    if (d == 0) ++h.rank;
    else if (d > 1) h.torsion.push_back(d);
  }
  std::sort(h.torsion.begin(), h.torsion.end());
  return h;
}

bool grauert_check(const PlumbingGraph& g) {
  return is_negative_definite(intersection_matrix(g));
}

MoveScript figure1_witness(int genus, const std::vector<long>& powers) {
  const PlumbingGraph left = star_graph_left(genus, powers);
  MoveScript script;
  int fresh = left.next_id();
  for (std::size_t i = 0; i < powers.size(); ++i) {
    const int leaf = static_cast<int>(i) + 1;
    int inner = 0;
    for (long j = 0; j < powers[i]; ++j) {
      script.push_back({MoveKind::BlowUpOnEdge, {inner, leaf}});
      inner = fresh++;
    }
    script.push_back({MoveKind::AbsorbZeroLeaf, {leaf}});
  }
  return script;
}

namespace {

std::string canonical_rooted(const PlumbingGraph& g, int v, int parent) {
  std::vector<std::string> kids;
  for (int n : g.neighbors(v))
    if (n != parent) kids.push_back(canonical_rooted(g, n, v));
  std::sort(kids.begin(), kids.end());
  const auto& x = g.vertex(v);
  std::string s = "(" + std::to_string(x.weight) + "," + std::to_string(x.genus);
  for (const auto& k : kids) s += k;
  return s + ")";
}

std::string canonical_form(const PlumbingGraph& g) {
  if (g.empty()) return "";
  // Tree centres by repeated leaf stripping.
  std::map<int, std::size_t> deg;
  for (const auto& v : g.vertices()) deg[v.id] = g.degree(v.id);
  std::vector<int> layer;
  for (const auto& [id, d] : deg)
    if (d <= 1) layer.push_back(id);
  std::size_t remaining = g.size();
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<int> next;
    for (int leaf : layer)
      for (int n : g.neighbors(leaf))
        if (--deg[n] == 1) next.push_back(n);
    for (int leaf : layer) deg[leaf] = 0;
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    auto s = canonical_rooted(g, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

}  // namespace

bool isomorphic(const PlumbingGraph& a, const PlumbingGraph& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace steincalc
