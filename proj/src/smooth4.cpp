#include "steincalc/smooth4.hpp"

#include "steincalc/io.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace steincalc {

using nlohmann::json;

std::string Pi1Tag::to_string() const {
  switch (kind) {
    case Pi1Kind::Trivial: return "trivial";
    case Pi1Kind::ZPlusZn: return "Z+Z_" + std::to_string(parameter);
    case Pi1Kind::ProductSurface: return "pi1(Sigma_" + std::to_string(parameter) + ")";
    case Pi1Kind::Unknown: return "unknown";
  }
  return "unknown";
}

long ManifoldRecord::section_total() const {
  long n = 0;
  for (const auto& s : sections) n += s.count;
  return n;
}

namespace {

Provenance node(std::string op, json params, std::vector<Provenance> inputs = {},
                std::vector<std::string> notes = {}) {
  auto n = std::make_shared<ProvenanceNode>();
  n->op = std::move(op);
  n->params = std::move(params);
  n->inputs = std::move(inputs);
  n->notes = std::move(notes);
  return n;
}

}  // namespace

ManifoldRecord make_X_g1(int genus) {
  if (genus < 1) throw Error("make_X_g1: genus must be >= 1");
  const long blowups = 4L * genus + 5;
  ManifoldRecord r;
  r.name = "X(" + std::to_string(genus) + ",1)";
  r.euler_char = 3 + blowups;  // chi(CP^2) = 3, each blow-up adds 1
  r.signature = 1 - blowups;
  r.fiber_genus = genus;
  r.sections = {{-1, section_count(genus)}};
  r.pi1 = {Pi1Kind::Trivial, 0, "hyperelliptic-lf"};
  r.provenance = node("make_X_g1", {{"g", genus}});
  return r;
}

ManifoldRecord make_W(int m) {
  if (m < 1) throw Error("make_W: m must be >= 1");
  ManifoldRecord r;
  r.name = "W(" + std::to_string(m) + ")";
  r.euler_char = 2L * (2 - 2L * m) + 8;  // chi(Sigma_m) chi(S^2) plus 8 blow-ups
  r.signature = -8;
  r.fiber_genus = 2L * m + 1;
  r.sections = {{-1, 2}};
  r.pi1 = {Pi1Kind::ProductSurface, m, "korkmaz-lf"};
  r.provenance = node("make_W", {{"m", m}});
  return r;
}

ManifoldRecord fiber_sum(const ManifoldRecord& a, const ManifoldRecord& b, FiberSumTwist twist) {
  if (!a.fiber_genus || !b.fiber_genus) throw Error("fiber_sum: both inputs need a fibre genus");
  if (*a.fiber_genus != *b.fiber_genus)
    throw Error("fiber_sum: fibre genus mismatch (" + std::to_string(*a.fiber_genus) + " vs " +
                std::to_string(*b.fiber_genus) + ")");
  if (twist.twisted && twist.n < 1) throw Error("fiber_sum: twist power n must be positive");
  const long g = *a.fiber_genus;

  ManifoldRecord r;
  r.euler_char = a.euler_char + b.euler_char - 2 * (2 - 2 * g);
  r.signature = a.signature + b.signature;
  r.fiber_genus = g;

  // A section of square s sews with one of square t into one of square s + t.
  // With a single square class per side the pairing is canonical; otherwise
  // only equal squares are paired and the rest are dropped.
  if (a.sections.size() == 1 && b.sections.size() == 1) {
    const auto& sa = a.sections.front();
    const auto& sb = b.sections.front();
    r.sections.push_back({sa.square + sb.square, std::min(sa.count, sb.count)});
  } else {
    for (const auto& sa : a.sections)
      for (const auto& sb : b.sections)
        if (sa.square == sb.square) r.sections.push_back({sa.square + sb.square, std::min(sa.count, sb.count)});
  }

  const bool both_W = a.provenance && b.provenance && a.provenance->op == "make_W" &&
                      b.provenance->op == "make_W" && a.provenance->params == b.provenance->params;
  if (twist.twisted) {
    if (both_W) r.pi1 = {Pi1Kind::ZPlusZn, twist.n, "twisted-fiber-sum-pi1"};
    else r.pi1 = {Pi1Kind::Unknown, 0, ""};
  } else if (a.pi1.kind == Pi1Kind::Trivial && b.pi1.kind == Pi1Kind::Trivial &&
             a.section_total() > 0 && b.section_total() > 0) {
    r.pi1 = {Pi1Kind::Trivial, 0, "fiber-sum-sections"};
  } else {
    r.pi1 = {Pi1Kind::Unknown, 0, ""};
  }

  const bool both_X1 = a.provenance && b.provenance && a.provenance->op == "make_X_g1" &&
                       b.provenance->op == "make_X_g1" && a.name == b.name;
  if (both_X1 && !twist.twisted) r.name = "X(" + std::to_string(g) + ",2)";
  else if (both_W && twist.twisted)
    r.name = "W_" + std::to_string(twist.n) + "(" + a.provenance->params.at("m").dump() + ")";
  else r.name = "(" + a.name + " #F " + b.name + ")";

  r.sw_distinguisher = LaurentPoly(1);
  json params = twist.twisted ? json{{"twist", "n_twist"}, {"n", twist.n}} : json{{"twist", "untwisted"}};
  r.provenance = node("fiber_sum", std::move(params), {a.provenance, b.provenance},
                      {"distinguisher reset to 1; no product formula is applied"});
  return r;
}

ManifoldRecord knot_surgery(const ManifoldRecord& m, const SeifertMatrixK& knot, bool torus_null_homotopic) {
  if (!provenance_contains(m.provenance, "fiber_sum"))
    throw Error("knot_surgery: no fiber sum in the provenance, so there is no surgery torus");
  if (!m.fiber_genus) throw Error("knot_surgery: input has no fibre genus");

  ManifoldRecord r = m;
  r.name = m.name + "_" + knot.name();
  r.fiber_genus = *m.fiber_genus + 2L * knot.genus();
  r.sw_distinguisher = (m.sw_distinguisher * substitute_t_squared(alexander(knot))).normalized();
  if (torus_null_homotopic && m.pi1.kind != Pi1Kind::Unknown) r.pi1.citation = "surgery-pi1";
  else r.pi1 = {Pi1Kind::Unknown, 0, ""};
  r.provenance = node("knot_surgery", {{"knot", to_json(knot)}, {"torus_null_homotopic", torus_null_homotopic}},
                      {m.provenance});
  return r;
}

PlumbingGraph excised_plumbing(int genus, long p, long r) {
  if (r == 0) return PlumbingGraph({{0, 0, genus}}, {});
  return reverse_orientation(star_graph_left(genus, std::vector<long>(static_cast<std::size_t>(r), p)));
}

FillingRecord excise_filling(const ManifoldRecord& m, long r) {
  if (!m.fiber_genus) throw Error("excise_filling: input has no fibre genus");
  if (r < 0) throw Error("excise_filling: r must be non-negative");
  std::set<long> squares;
  for (const auto& s : m.sections)
    if (s.count > 0) squares.insert(s.square);
  if (squares.size() > 1) throw Error("excise_filling: mixed section squares");
  const long available = m.section_total();
  if (available < r + 1)
    throw Error("excise_filling: " + std::to_string(available) + " section(s) available, need " +
                std::to_string(r + 1) + " (r removed plus one retained)");
  const long square = *squares.begin();
  if (square >= 0) throw Error("excise_filling: sections must have negative square");
  const long p = -square;
  const int h = static_cast<int>(*m.fiber_genus);

  FillingRecord f;
  f.removed_sections = r;
  ManifoldRecord& v = f.base;
  v.name = "V[" + m.name + ", r=" + std::to_string(r) + "]";
  // Mayer-Vietoris: chi(nbhd of fibre + r once-meeting spheres) = (2 - 2h) + r
  // and the separating 3-manifold has chi = 0.
  v.euler_char = m.euler_char - (2 - 2L * h) - r;
  v.signature = m.signature - signature(intersection_matrix(excised_plumbing(h, p, r)));
  v.fiber_genus = h;
  v.sections = {{square, available - r}};
  v.sw_distinguisher = m.sw_distinguisher;
  v.provenance = node("excise_filling", {{"r", r}}, {m.provenance});

  if (r >= 1) {
    const OpenBookDesc ob{h, std::vector<long>(static_cast<std::size_t>(r), p)};
    f.boundary = openbook_manifold(ob);
    f.boundary_h1 = openbook_homology(ob);
    f.stein_flag = true;
    f.stein_citation = "palf-stein";
  } else {
    f.boundary = SeifertData(h, 0, {});
    f.boundary_h1 = {2 * h + 1, {}};
    f.warnings.push_back("r = 0: boundary is the trivial circle bundle over the fibre; no Stein structure is claimed");
  }

  const auto roots = provenance_roots(m.provenance);
  const bool x_pipeline = !roots.empty() && std::all_of(roots.begin(), roots.end(),
                                                        [](const std::string& op) { return op == "make_X_g1"; });
  if (m.pi1.kind == Pi1Kind::Trivial && x_pipeline) {
    f.simply_connected = true;
    f.simply_connected_citation = "vk-retained-section";
    v.pi1 = {Pi1Kind::Trivial, 0, "vk-retained-section"};
  } else if (m.pi1.kind == Pi1Kind::ZPlusZn) {
    v.pi1 = {Pi1Kind::ZPlusZn, m.pi1.parameter, "vk-retained-section"};
  } else {
    v.pi1 = {Pi1Kind::Unknown, 0, ""};
  }

  if (f.boundary_h1.rank > 0) {
    f.det_intersection_form = 0;
    f.det_justification = "boundary H_1 has rank " + std::to_string(f.boundary_h1.rank) +
                          " > 0, so the intersection form is degenerate";
  } else {
    f.det_justification = "boundary H_1 is finite; determinant not determined by bookkeeping";
  }
  return f;
}

DistinctnessReport distinguisher_distinct(const std::vector<LaurentPoly>& family) {
  if (family.empty()) throw Error("distinguisher_distinct: family required");
  DistinctnessReport rep;
  std::vector<LaurentPoly> norm;
  for (const auto& p : family) norm.push_back(p.normalized());
  for (std::size_t i = 0; i < norm.size(); ++i)
    for (std::size_t j = i + 1; j < norm.size(); ++j) {
      ++rep.pairs_checked;
      if (norm[i] == norm[j]) rep.collisions.emplace_back(i, j);
    }
  rep.all_distinct = rep.collisions.empty();
  rep.verdict = rep.all_distinct
                    ? "pairwise non-diffeomorphic (conditional on cited SW nonvanishing)"
                    : std::to_string(rep.collisions.size()) + " colliding pair(s); no distinction claimed";
  return rep;
}

DistinctnessReport distinguisher_distinct(const std::vector<ManifoldRecord>& family) {
  std::vector<LaurentPoly> ps;
  for (const auto& m : family) ps.push_back(m.sw_distinguisher);
  return distinguisher_distinct(ps);
}

DistinctnessReport distinguisher_distinct(const std::vector<FillingRecord>& family) {
  std::vector<LaurentPoly> ps;
  for (const auto& f : family) ps.push_back(f.base.sw_distinguisher);
  return distinguisher_distinct(ps);
}

bool provenance_contains(const Provenance& p, const std::string& op) {
  if (!p) return false;
  if (p->op == op) return true;
  return std::any_of(p->inputs.begin(), p->inputs.end(),
                     [&](const Provenance& q) { return provenance_contains(q, op); });
}

std::vector<std::string> provenance_roots(const Provenance& p) {
  std::vector<std::string> out;
  std::function<void(const Provenance&)> walk = [&](const Provenance& q) {
    if (!q) return;
    if (q->inputs.empty()) out.push_back(q->op);
    for (const auto& i : q->inputs) walk(i);
  };
  walk(p);
  return out;
}

ManifoldRecord replay(const Provenance& p) {
  if (!p) throw Error("replay: empty provenance");
  const auto& prm = p->params;
  if (p->op == "make_X_g1") return make_X_g1(prm.at("g").get<int>());
  if (p->op == "make_W") return make_W(prm.at("m").get<int>());
  if (p->op == "fiber_sum") {
    if (p->inputs.size() != 2) throw Error("replay: fiber_sum needs two inputs");
    const FiberSumTwist tw = prm.at("twist") == "n_twist" ? FiberSumTwist::n_twist(prm.at("n").get<long>())
                                                          : FiberSumTwist::untwisted();
    return fiber_sum(replay(p->inputs[0]), replay(p->inputs[1]), tw);
  }
  if (p->op == "knot_surgery") {
    if (p->inputs.size() != 1) throw Error("replay: knot_surgery needs one input");
    return knot_surgery(replay(p->inputs[0]), knot_from_json(prm.at("knot")),
                        prm.at("torus_null_homotopic").get<bool>());
  }
  if (p->op == "excise_filling") return replay_filling(p).base;
  throw Error("replay: unknown op '" + p->op + "'");
}

FillingRecord replay_filling(const Provenance& p) {
  if (!p || p->op != "excise_filling" || p->inputs.size() != 1)
    throw Error("replay_filling: provenance does not end in excise_filling");
  return excise_filling(replay(p->inputs[0]), p->params.at("r").get<long>());
}

json to_json(const Provenance& p) {
  if (!p) return nullptr;
  json inputs = json::array();
  for (const auto& i : p->inputs) inputs.push_back(to_json(i));
  json j{{"op", p->op}, {"params", p->params}, {"inputs", inputs}};
  if (!p->notes.empty()) j["notes"] = p->notes;
  return j;
}

Provenance provenance_from_json(const json& j) {
  if (j.is_null()) return nullptr;
  std::vector<Provenance> inputs;
  for (const auto& i : j.value("inputs", json::array())) inputs.push_back(provenance_from_json(i));
  return node(j.at("op").get<std::string>(), j.value("params", json::object()), std::move(inputs),
              j.value("notes", std::vector<std::string>{}));
}

namespace {

json pi1_json(const Pi1Tag& t) {
  json j{{"tag", t.to_string()}};
  if (!t.citation.empty()) j["citation"] = t.citation;
  return j;
}

}  // namespace

json to_json(const SeifertData& s) {
  json legs = json::array();
  for (const auto& l : s.legs) legs.push_back({l.alpha, l.beta});
  return {{"base_genus", s.base_genus}, {"e0", s.e0}, {"legs", legs}, {"euler_number", euler_number(s).get_str()}};
}

json to_json(const BoundaryHomology& h) {
  json tors = json::array();
  for (const auto& t : h.torsion) tors.push_back(t.get_str());
  return {{"rank", h.rank}, {"torsion", tors}, {"group", to_string(h)}};
}

json to_json(const ManifoldRecord& m) {
  json sections = json::array();
  for (const auto& s : m.sections) sections.push_back({{"square", s.square}, {"count", s.count}});
  json j{{"name", m.name},
         {"euler_char", m.euler_char},
         {"signature", m.signature},
         {"sections", sections},
         {"pi1", pi1_json(m.pi1)},
         {"sw_distinguisher", m.sw_distinguisher.to_string()},
         {"provenance", to_json(m.provenance)}};
  j["fiber_genus"] = m.fiber_genus ? json(*m.fiber_genus) : json(nullptr);
  return j;
}

json to_json(const FillingRecord& f) {
  json j = to_json(f.base);
  j["boundary"] = to_json(f.boundary);
  j["boundary_h1"] = to_json(f.boundary_h1);
  j["stein_flag"] = {{"value", f.stein_flag}, {"citation", f.stein_citation}};
  j["simply_connected"] = {{"value", f.simply_connected}, {"citation", f.simply_connected_citation}};
  j["det_intersection_form"] = {
      {"value", f.det_intersection_form ? json(*f.det_intersection_form) : json(nullptr)},
      {"justification", f.det_justification}};
  j["removed_sections"] = f.removed_sections;
  if (!f.warnings.empty()) j["warnings"] = f.warnings;
  return j;
}

}  // namespace steincalc
