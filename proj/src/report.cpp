#include "steincalc/report.hpp"

#include "steincalc/bibliography.hpp"
#include "steincalc/io.hpp"
#include "steincalc/mcg.hpp"
#include "steincalc/plumbing.hpp"
#include "steincalc/seifert.hpp"
#include "steincalc/smooth4.hpp"

#include <sstream>

namespace steincalc {

using nlohmann::json;

void Report::check(std::string name, const std::string& expected, const std::string& got, std::string citation) {
  checks.push_back({std::move(name), expected, got, expected == got, std::move(citation)});
}

void Report::check(std::string name, bool ok, std::string expected, std::string got, std::string citation) {
  checks.push_back({std::move(name), std::move(expected), std::move(got), ok, std::move(citation)});
}

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  for (const auto& s : subreports)
    if (!s.passed()) return false;
  return true;
}

json Report::to_json() const {
  json inv = json::array();
  for (const auto& [k, v] : invariants) inv.push_back({{"name", k}, {"value", v}});
  json cs = json::array();
  for (const auto& c : checks)
    cs.push_back({{"name", c.name},
                  {"expected", c.expected},
                  {"got", c.got},
                  {"verdict", c.pass ? "pass" : "fail"},
                  {"citation", c.citation}});
  json as = json::array();
  for (const auto& a : assumptions) as.push_back({{"claim", a.claim}, {"citation", a.citation}});
  json subs = json::array();
  for (const auto& s : subreports) subs.push_back(s.to_json());
  json j{{"title", title},       {"inputs", inputs},          {"invariants", inv},
         {"checks", cs},         {"cited_assumptions", as},   {"verdict", passed() ? "pass" : "fail"}};
  if (!notes.empty()) j["notes"] = notes;
  if (!subs.empty()) j["subreports"] = subs;
  return j;
}

std::string Report::to_markdown(int depth) const {
  std::ostringstream os;
  const std::string h(static_cast<std::size_t>(depth), '#');
  os << h << ' ' << title << "\n\n";
  os << "Inputs: `" << inputs.dump() << "`\n\n";
  if (!invariants.empty()) {
    os << "| invariant | value |\n|---|---|\n";
    for (const auto& [k, v] : invariants) os << "| " << k << " | " << v << " |\n";
    os << '\n';
  }
  if (!checks.empty()) {
    os << "**Machine-verified checks**\n\n| check | expected | got | verdict | citation |\n|---|---|---|---|---|\n";
    for (const auto& c : checks)
      os << "| " << c.name << " | " << c.expected << " | " << c.got << " | " << (c.pass ? "pass" : "FAIL")
         << " | " << c.citation << " |\n";
    os << '\n';
  }
  if (!assumptions.empty()) {
    os << "**Cited assumptions (not computed)**\n\n";
    for (const auto& a : assumptions) os << "- " << a.claim << " [" << a.citation << "]\n";
    os << '\n';
  }
  for (const auto& n : notes) os << "> " << n << "\n";
  if (!notes.empty()) os << '\n';
  for (const auto& s : subreports) os << s.to_markdown(depth + 1);
  os << "**Verdict: " << (passed() ? "pass" : "fail") << "**\n\n";
  return os.str();
}

namespace {

std::string str(long v) { return std::to_string(v); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string pair_str(long a, long b) { return "(" + str(a) + ", " + str(b) + ")"; }

std::string powers_str(const std::vector<long>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::string sections_str(const std::vector<SectionGroup>& s) {
  std::string out;
  for (const auto& g : s) out += (out.empty() ? "" : ", ") + std::string("(") + str(g.square) + ") x " + str(g.count);
  return out.empty() ? "none" : out;
}

Rational minus_sum_reciprocals(const std::vector<long>& p) {
  Rational e(0);
  for (long x : p) e -= Rational(1, x);
  e.canonicalize();
  return e;
}

json family_json(const std::vector<SeifertMatrixK>& fam) {
  json j = json::array();
  for (const auto& k : fam) j.push_back(k.name());
  return j;
}

// Shared tail of both filling pipelines: boundary, contact flags and the
// distinguisher comparison.
void check_boundary(Report& rep, const FillingRecord& f, int h, const std::vector<long>& powers) {
  const OpenBookDesc ob{h, powers};
  const SeifertData want = openbook_manifold(ob);
  rep.check("boundary Seifert data of " + f.base.name, to_string(want), to_string(f.boundary), "transverse-open-book");
  rep.check("boundary Euler number", minus_sum_reciprocals(powers).get_str(), euler_number(f.boundary).get_str(),
            kDerivedOracle);
  rep.check("boundary is a singularity link", "true", str(is_singularity_link(f.boundary)), "neumann-criterion");
  const auto flags = canonical_contact_flag(f.boundary);
  rep.check("canonical contact structure (Milnor fillable, S^1-invariant transverse)", "true, true",
            str(flags.milnor_fillable) + ", " + str(flags.unique_transverse_invariant_class), "canonical-contact");
  const auto plumb = boundary_homology(reverse_orientation(excised_plumbing(h, powers.front(), static_cast<long>(powers.size()))));
  rep.check("boundary H_1 (open book vs plumbing)", to_string(plumb), to_string(f.boundary_h1), "plumbing-h1");
  rep.check("Stein flag", "true", str(f.stein_flag), f.stein_citation.empty() ? "palf-stein" : f.stein_citation);
  rep.check("det of intersection form", "0",
            f.det_intersection_form ? str(*f.det_intersection_form) : std::string("undetermined"), kDerivedOracle);
}

void check_distinct(Report& rep, const std::vector<FillingRecord>& fillings) {
  const auto d = distinguisher_distinct(fillings);
  const std::size_t n = fillings.size();
  rep.check("distinguisher pairs distinct", str(static_cast<long>(n * (n - 1) / 2)) + "/" + str(static_cast<long>(n * (n - 1) / 2)),
            str(static_cast<long>(d.pairs_checked - d.collisions.size())) + "/" + str(static_cast<long>(d.pairs_checked)),
            "fintushel-stern");
  rep.notes.push_back("distinguisher verdict: " + d.verdict);
}

void require_family(const std::vector<SeifertMatrixK>& fam, int k, Report& rep) {
  if (fam.empty()) throw Error("family required");
  const auto fr = family_report(fam, k);
  if (!fr.failures.empty()) {
    std::string why;
    for (const auto& f : fr.failures) why += (why.empty() ? "" : "; ") + f;
    throw Error("knot family rejected: " + why);
  }
  rep.check("family: genus " + str(static_cast<long>(k)) + ", monic, span 2k", "true", "true", "kanenobu");
  for (std::size_t i = 0; i < fam.size(); ++i)
    rep.invariants.emplace_back("Delta(" + fam[i].name() + ")", fr.polynomials[i].to_string());
}

}  // namespace

Report report_figure1(int genus, const std::vector<long>& powers) {
  if (genus < 0) throw Error("figure1: genus must be >= 0");
  if (powers.empty()) throw Error("figure1: multiplicity tuple required");
  for (long p : powers)
    if (p < 2) throw Error("figure1: multiplicities must be >= 2");

  Report rep;
  rep.title = "Star plumbing equivalence for Y_{" + str(static_cast<long>(genus)) + "," + powers_str(powers) + "}";
  rep.inputs = {{"genus", genus}, {"powers", powers}};

  const PlumbingGraph left = star_graph_left(genus, powers);
  const PlumbingGraph right = star_graph_right(genus, powers);
  const auto h_left = boundary_homology(left);
  const auto h_right = boundary_homology(right);
  const OpenBookDesc ob{genus, powers};
  const auto h_ob = openbook_homology(ob);

  rep.invariants.emplace_back("H_1 (left graph)", to_string(h_left));
  rep.invariants.emplace_back("H_1 (right graph)", to_string(h_right));
  rep.invariants.emplace_back("H_1 (open book)", to_string(h_ob));
  rep.invariants.emplace_back("det (left, right)",
                              determinant(intersection_matrix(left)).get_str() + ", " +
                                  determinant(intersection_matrix(right)).get_str());

  rep.check("H_1 left == H_1 right", to_string(h_left), to_string(h_right), "plumbing-h1");
  rep.check("H_1 open book == H_1 plumbing", to_string(h_left), to_string(h_ob), kDerivedOracle);
  rep.check("H_1 free rank", str(2L * genus), str(static_cast<long>(h_left.rank)), "plumbing-h1");

  const MoveScript script = figure1_witness(genus, powers);
  PlumbingGraph moved;
  bool replayed = true;
  std::string replay_msg = "ok (" + str(static_cast<long>(script.size())) + " moves)";
  try {
    moved = replay(left, script);
  } catch (const MoveError& e) {
    replayed = false;
    replay_msg = e.what();
  }
  rep.check("move script replays", "ok (" + str(static_cast<long>(script.size())) + " moves)", replay_msg,
            kDerivedOracle);
  if (replayed)
    rep.check("moved left graph isomorphic to right graph", "true", str(isomorphic(moved, right)), kDerivedOracle);

  const SeifertData s_right = star_to_seifert(right, 0);
  const SeifertData s_ob = openbook_manifold(ob);
  rep.invariants.emplace_back("Seifert data", to_string(s_right));
  if (replayed) {
    const SeifertData s_left = star_to_seifert(moved);
    rep.check("Seifert data (moved left) == Seifert data (right)", to_string(s_right), to_string(s_left),
              kDerivedOracle);
  }
  rep.check("Seifert data (open book) == Seifert data (right)", to_string(s_right), to_string(s_ob),
            "transverse-open-book");
  rep.check("Euler number == -sum 1/p_i", minus_sum_reciprocals(powers).get_str(), euler_number(s_right).get_str(),
            kDerivedOracle);
  rep.check("singularity link (e < 0)", "true", str(is_singularity_link(s_right)), "neumann-criterion");
  rep.check("right graph negative definite", "true", str(grauert_check(right)), "grauert");
  const auto flags = canonical_contact_flag(s_right);
  rep.check("canonical contact flags", "true, true",
            str(flags.milnor_fillable) + ", " + str(flags.unique_transverse_invariant_class), "canonical-contact");
  return rep;
}

Report report_thm44(int g, int k, long r, std::optional<std::vector<SeifertMatrixK>> family) {
  if (g < 2) throw Error("thm44: g must be >= 2");
  if (k < 2) throw Error("thm44: k must be >= 2");
  if (r < 1 || r > 4L * g + 3) throw Error("thm44: r must satisfy 1 <= r <= 4g+3");
  const auto fam = family ? *family : demo_family(k);

  Report rep;
  const int h = g + 2 * k;
  rep.title = "Exotic simply connected Stein fillings of Y_{" + str(static_cast<long>(h)) + "," +
              powers_str(std::vector<long>(static_cast<std::size_t>(r), 2)) + "}";
  rep.inputs = {{"g", g}, {"k", k}, {"r", r}, {"family", family_json(fam)}};
  require_family(fam, k, rep);

  const ManifoldRecord x1 = make_X_g1(g);
  rep.check("chi(X(g,1)) == chi of fibration with 8g+4 singular fibres", str(lf_euler_characteristic(g, 8L * g + 4)),
            str(x1.euler_char), "hyperelliptic-lf");
  const ManifoldRecord x2 = fiber_sum(x1, x1, FiberSumTwist::untwisted());
  rep.check("(chi, sigma) of X(g,2)", pair_str(12L * g + 12, -8L * g - 8), pair_str(x2.euler_char, x2.signature),
            "novikov");
  rep.check("sections of X(g,2)", sections_str({{-2, 4L * g + 4}}), sections_str(x2.sections), "fiber-sum-sections");

  const long chi_expected = (12L * g + 12) - (2 - 2L * h) - r;
  const long sigma_expected = (-8L * g - 8) - (1 - r);
  std::vector<FillingRecord> fillings;
  bool genus_ok = true, sc_ok = true, const_ok = true, sections_ok = true;
  for (const auto& K : fam) {
    const ManifoldRecord xk = knot_surgery(x2, K, true);
    genus_ok = genus_ok && xk.fiber_genus == h;
    sections_ok = sections_ok && xk.sections == x2.sections;
    FillingRecord f = excise_filling(xk, r);
    sc_ok = sc_ok && f.simply_connected;
    const_ok = const_ok && f.base.euler_char == chi_expected && f.base.signature == sigma_expected;
    rep.invariants.emplace_back(f.base.name, "(chi, sigma) = " + pair_str(f.base.euler_char, f.base.signature) +
                                                 ", distinguisher " + f.base.sw_distinguisher.to_string());
    fillings.push_back(std::move(f));
  }
  rep.check("fibre genus after surgery == g + 2k", "true", str(genus_ok), "fibered-knot-surgery");
  rep.check("4g+4 (-2)-sections survive surgery", "true", str(sections_ok), "surgery-sections");
  rep.check("(chi, sigma) constant across family", pair_str(chi_expected, sigma_expected),
            const_ok ? pair_str(chi_expected, sigma_expected) : std::string("varies"), kDerivedOracle);
  rep.check("fillings simply connected", "true", str(sc_ok), "vk-retained-section");
  check_boundary(rep, fillings.front(), h, std::vector<long>(static_cast<std::size_t>(r), 2));
  check_distinct(rep, fillings);

  rep.assumptions = {
      {"Seiberg-Witten invariant of X(g,2) is nonzero, so distinct multipliers give non-diffeomorphic manifolds",
       "fintushel-stern"},
      {"each family knot is fibered (Hopf plumbing / cited family); only the monic + span test is computed",
       "kanenobu"},
      {"the removed neighbourhood is the same plumbing for every member and its boundary diffeomorphisms extend",
       "palf-stein"},
      {"the fillings belong to finitely many homeomorphism types", "boyer"},
      {"equal rank, signature and zero determinant give isomorphic intersection forms here", "indefinite-forms"},
  };
  return rep;
}

Report report_thm53(int m, long n, int k, std::optional<std::vector<SeifertMatrixK>> family) {
  if (m < 1) throw Error("thm53: m must be >= 1");
  if (n < 1) throw Error("thm53: n must be positive");
  if (k < 2) throw Error("thm53: k must be >= 2");
  const auto fam = family ? *family : demo_family(k);

  Report rep;
  const int g = 2 * m + 1;
  const int h = g + 2 * k;
  rep.title = "Exotic Stein fillings of Y_{" + str(static_cast<long>(h)) + ",(2)} with pi_1 = Z+Z_" + str(n);
  rep.inputs = {{"m", m}, {"n", n}, {"k", k}, {"family", family_json(fam)}};
  require_family(fam, k, rep);

  const ManifoldRecord w = make_W(m);
  rep.check("chi(W(m)) == chi of fibration with 2g+10 singular fibres", str(lf_euler_characteristic(g, 2L * g + 10)),
            str(w.euler_char), "korkmaz-lf");
  const ManifoldRecord wn = fiber_sum(w, w, FiberSumTwist::n_twist(n));
  rep.invariants.emplace_back(wn.name, "(chi, sigma) = " + pair_str(wn.euler_char, wn.signature) + ", fibre genus " +
                                           str(*wn.fiber_genus));
  rep.check("(chi, sigma) of " + wn.name, pair_str(24, -16), pair_str(wn.euler_char, wn.signature), "novikov");
  rep.check("sections of " + wn.name, sections_str({{-2, 2}}), sections_str(wn.sections), "korkmaz-sections");
  rep.check("pi_1 tag of " + wn.name, "Z+Z_" + str(n), wn.pi1.to_string(), wn.pi1.citation.empty() ? "twisted-fiber-sum-pi1" : wn.pi1.citation);

  std::vector<FillingRecord> fillings;
  bool genus_ok = true, pi1_ok = true, const_ok = true;
  const long chi_expected = 24 - (2 - 2L * h) - 1;
  const long sigma_expected = -16;
  for (const auto& K : fam) {
    const ManifoldRecord wk = knot_surgery(wn, K, true);
    genus_ok = genus_ok && wk.fiber_genus == h;
    pi1_ok = pi1_ok && wk.pi1.kind == Pi1Kind::ZPlusZn && wk.pi1.parameter == n;
    FillingRecord f = excise_filling(wk, 1);
    pi1_ok = pi1_ok && f.base.pi1.kind == Pi1Kind::ZPlusZn && f.base.pi1.parameter == n;
    const_ok = const_ok && f.base.euler_char == chi_expected && f.base.signature == sigma_expected;
    rep.invariants.emplace_back(f.base.name, "(chi, sigma) = " + pair_str(f.base.euler_char, f.base.signature) +
                                                 ", pi_1 " + f.base.pi1.to_string() + ", distinguisher " +
                                                 f.base.sw_distinguisher.to_string());
    fillings.push_back(std::move(f));
  }
  rep.check("fibre genus after surgery == 2(m+k)+1", "true", str(genus_ok), "fibered-knot-surgery");
  rep.check("pi_1 tag Z+Z_n propagates through surgery and excision", "true", str(pi1_ok), "surgery-pi1");
  rep.check("(chi, sigma) constant across family", pair_str(chi_expected, sigma_expected),
            const_ok ? pair_str(chi_expected, sigma_expected) : std::string("varies"), kDerivedOracle);
  check_boundary(rep, fillings.front(), h, {2});
  check_distinct(rep, fillings);

  rep.assumptions = {
      {"the knot-surgered twisted fiber sum is homeomorphic to the unsurgered one", "twisted-sum-homeomorphism"},
      {"Seiberg-Witten invariant of the twisted fiber sum is nonzero", "fintushel-stern"},
      {"pi_1 is assigned by catalog rule, never computed", "twisted-fiber-sum-pi1"},
      {"each family knot is fibered; only the monic + span test is computed", "kanenobu"},
  };
  return rep;
}

Report report_corollary55(int h, long n) {
  if (h < 7) throw Error("cor55: h must be >= 7");
  Report rep;
  rep.title = "Stein fillings of Y_{" + str(static_cast<long>(h)) + ",(2)}";
  rep.inputs = {{"h", h}, {"n", n}};

  const int k = 2;
  const int g = h - 2 * k;
  rep.invariants.emplace_back("simply connected family", "(g, k) = " + pair_str(g, k));
  rep.subreports.push_back(report_thm44(g, k, 1));

  if (h % 2 == 1) {
    const int m = (h - 1) / 2 - k;
    rep.invariants.emplace_back("Z+Z_n family", "(m, k) = " + pair_str(m, k));
    Report sub = report_thm53(m, n, k);
    sub.assumptions.push_back(
        {"fillings with infinite H_1 are not homeomorphic to a Milnor fiber (b_1 of a Milnor fiber vanishes)",
         "milnor-fiber-b1"});
    rep.subreports.push_back(std::move(sub));
  } else {
    rep.invariants.emplace_back("Z+Z_n family", "unavailable");
    rep.notes.push_back("Z+Z_n family unavailable at h = " + str(static_cast<long>(h)) +
                        ": its boundary genus 2(m+k)+1 is always odd");
  }
  return rep;
}

}  // namespace steincalc
