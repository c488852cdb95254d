#include "steincalc/io.hpp"
#include "steincalc/mcg.hpp"
#include "steincalc/report.hpp"
#include "steincalc/smooth4.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace steincalc;
using nlohmann::json;

namespace {

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error("not an integer list: '" + text + "'");
    }
  }
  if (out.empty()) throw Error("empty integer list");
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

json matrix_rows(const IntMatrix& m) { return to_json(m); }

int run_plumb_invariants(const std::string& path) {
  const PlumbingGraph g = graph_from_json(read_json_file(path));
  const IntMatrix q = intersection_matrix(g);
  const Inertia in = inertia(q);
  json minors = json::array();
  for (const auto& m : leading_principal_minors(q)) minors.push_back(m.get_str());
  json j{{"vertices", g.size()},
         {"intersection_matrix", matrix_rows(q)},
         {"determinant", determinant(q).get_str()},
         {"leading_minors", minors},
         {"inertia", {{"positive", in.positive}, {"negative", in.negative}, {"zero", in.zero}}},
         {"signature", signature(q)},
         {"negative_definite", grauert_check(g)},
         {"boundary_h1", to_json(boundary_homology(g))}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_plumb_moves(const std::string& graph_path, const std::string& script_path) {
  const PlumbingGraph g = graph_from_json(read_json_file(graph_path));
  const MoveScript s = move_script_from_json(read_json_file(script_path));
  const PlumbingGraph out = replay(g, s);
  const auto before = boundary_homology(g);
  const auto after = boundary_homology(out);
  json j{{"graph", to_json(out)},
         {"moves", s.size()},
         {"boundary_h1_before", to_json(before)},
         {"boundary_h1_after", to_json(after)},
         {"boundary_h1_preserved", before == after}};
  std::cout << j.dump(2) << '\n';
  return before == after ? 0 : 1;
}

int run_seifert_from_star(const std::string& path) {
  const PlumbingGraph g = graph_from_json(read_json_file(path));
  const SeifertData s = star_to_seifert(g);
  const auto flags = canonical_contact_flag(s);
  json j = to_json(s);
  j["singularity_link"] = is_singularity_link(s);
  j["milnor_fillable"] = flags.milnor_fillable;
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_seifert_open_book(int genus, const std::string& powers) {
  const OpenBookDesc ob{genus, parse_long_list(powers)};
  validate(ob);
  const SeifertData s = openbook_manifold(ob);
  json j = to_json(s);
  j["singularity_link"] = is_singularity_link(s);
  j["boundary_h1"] = to_json(openbook_homology(ob));
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_mcg_action(const std::string& word_path, const std::string& surface, const std::string& curves_path) {
  const auto gr = parse_long_list(surface);
  if (gr.size() != 2) throw Error("--surface expects g,r");
  TwistWord w;
  w.surface = {static_cast<int>(gr[0]), static_cast<int>(gr[1])};
  w.letters = parse_word(read_text_file(word_path));
  w.curves = curves_path.empty() ? hyperelliptic_chain(w.surface.genus) : curves_from_json(read_json_file(curves_path));
  const IntMatrix a = word_action(w);
  const std::size_t n = a.rows();
  json j{{"word", format_word(w.letters)},
         {"letters", w.letter_count()},
         {"matrix", matrix_rows(a)},
         {"is_identity", a == IntMatrix::identity(n)},
         {"is_minus_identity", a == IntMatrix::diagonal(std::vector<Integer>(n, Integer(-1)))}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_lf_chi(const std::string& catalog, long param) {
  TwistWord w;
  long genus = 0;
  if (catalog == "hyperelliptic") {
    if (param < 1) throw Error("hyperelliptic catalog needs genus >= 1");
    w = hyperelliptic_word(static_cast<int>(param));
    genus = param;
  } else {
    if (param < 1) throw Error("korkmaz catalog needs m >= 1");
    w = korkmaz_word(static_cast<int>(param));
    genus = 2 * param + 1;
  }
  json j{{"catalog", catalog},
         {"genus", genus},
         {"singular_fibers", w.letter_count()},
         {"euler_characteristic", lf_euler_characteristic(genus, w.letter_count())}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_knots_alexander(const std::string& path) {
  const json in = read_json_file(path);
  const SeifertMatrixK k = in.is_array() ? SeifertMatrixK("K", matrix_from_json(in)) : knot_from_json(in);
  const auto cert = fibered_certificate(k);
  json j{{"name", k.name()},
         {"genus", k.genus()},
         {"alexander", alexander(k).to_string()},
         {"alexander_raw", alexander_raw(k).to_string()},
         {"monic", cert.monic},
         {"full_span", cert.full_span}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

struct ReportArgs {
  std::string format = "json";
  std::string out;
  std::string family;
};

std::optional<std::vector<SeifertMatrixK>> load_family(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return family_from_json(read_json_file(path));
}

int finish(const Report& r, const ReportArgs& a) {
  emit(a.format == "md" ? r.to_markdown() : r.to_json().dump(2), a.out);
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"steincalc: exact invariants for plumbings, Seifert manifolds, Lefschetz fibrations and knots"};
  app.require_subcommand(1);
  int rc = 0;

  auto* plumb = app.add_subcommand("plumb", "plumbing graphs");
  plumb->require_subcommand(1);
  std::string graph_path, script_path;
  auto* inv = plumb->add_subcommand("invariants", "intersection form, inertia and boundary H_1");
  inv->add_option("graph", graph_path, "graph JSON")->required()->check(CLI::ExistingFile);
  inv->callback([&] { rc = run_plumb_invariants(graph_path); });
  auto* moves = plumb->add_subcommand("moves", "replay a move script");
  moves->add_option("graph", graph_path, "graph JSON")->required()->check(CLI::ExistingFile);
  moves->add_option("script", script_path, "move script JSON")->required()->check(CLI::ExistingFile);
  moves->callback([&] { rc = run_plumb_moves(graph_path, script_path); });

  auto* seif = app.add_subcommand("seifert", "Seifert invariants");
  seif->require_subcommand(1);
  auto* from_star = seif->add_subcommand("from-star", "read Seifert data off a star plumbing");
  from_star->add_option("graph", graph_path, "graph JSON")->required()->check(CLI::ExistingFile);
  from_star->callback([&] { rc = run_seifert_from_star(graph_path); });
  int ob_genus = 0;
  std::string ob_powers;
  auto* ob = seif->add_subcommand("open-book", "manifold of the open book with boundary twist powers");
  ob->add_option("--genus", ob_genus, "page genus h")->required();
  ob->add_option("--powers", ob_powers, "p1,...,pr")->required();
  ob->callback([&] { rc = run_seifert_open_book(ob_genus, ob_powers); });

  auto* mcg = app.add_subcommand("mcg", "mapping class group actions");
  mcg->require_subcommand(1);
  std::string word_path, surface, curves_path;
  auto* action = mcg->add_subcommand("action", "homology action of a twist word");
  action->add_option("--word", word_path, "word file")->required()->check(CLI::ExistingFile);
  action->add_option("--surface", surface, "g,r")->required();
  action->add_option("--curves", curves_path, "curve data JSON (default: hyperelliptic chain)")
      ->check(CLI::ExistingFile);
  action->callback([&] { rc = run_mcg_action(word_path, surface, curves_path); });

  auto* lf = app.add_subcommand("lf", "Lefschetz fibrations");
  lf->require_subcommand(1);
  std::string catalog;
  long param = 0;
  auto* chi = lf->add_subcommand("chi", "Euler characteristic from a catalog monodromy");
  chi->add_option("--catalog", catalog, "hyperelliptic or korkmaz")
      ->required()
      ->check(CLI::IsMember({"hyperelliptic", "korkmaz"}));
  chi->add_option("--param", param, "genus g (hyperelliptic) or m (korkmaz)")->required();
  chi->callback([&] { rc = run_lf_chi(catalog, param); });

  auto* knots = app.add_subcommand("knots", "Seifert matrices");
  knots->require_subcommand(1);
  std::string knot_path;
  auto* alex = knots->add_subcommand("alexander", "normalized Alexander polynomial");
  alex->add_option("matrix", knot_path, "knot JSON or bare matrix")->required()->check(CLI::ExistingFile);
  alex->callback([&] { rc = run_knots_alexander(knot_path); });

  auto* report = app.add_subcommand("report", "end-to-end invariant reports");
  report->require_subcommand(1);
  ReportArgs ra;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", ra.format, "json or md")->check(CLI::IsMember({"json", "md"}));
    sub->add_option("--out", ra.out, "output path (default stdout)");
  };

  int f_genus = 2;
  std::string f_powers = "2";
  auto* fig = report->add_subcommand("figure1", "star plumbing equivalence");
  fig->add_option("--genus", f_genus, "central genus h");
  fig->add_option("--powers", f_powers, "p1,...,pr");
  add_common(fig);
  fig->callback([&] { rc = finish(report_figure1(f_genus, parse_long_list(f_powers)), ra); });

  int g = 2, k = 2;
  long r = 1;
  auto* t44 = report->add_subcommand("thm44", "simply connected exotic fillings");
  t44->add_option("--g", g, "genus of X(g,1)");
  t44->add_option("--k", k, "knot genus");
  t44->add_option("--r", r, "number of removed sections");
  t44->add_option("--family", ra.family, "knot family JSON (default: demo family)")->check(CLI::ExistingFile);
  add_common(t44);
  t44->callback([&] { rc = finish(report_thm44(g, k, r, load_family(ra.family)), ra); });

  int m = 1;
  long n = 3;
  auto* t53 = report->add_subcommand("thm53", "fillings with pi_1 = Z + Z_n");
  t53->add_option("--m", m, "W(m) parameter");
  t53->add_option("--n", n, "twist order");
  t53->add_option("--k", k, "knot genus");
  t53->add_option("--family", ra.family, "knot family JSON (default: demo family)")->check(CLI::ExistingFile);
  add_common(t53);
  t53->callback([&] { rc = finish(report_thm53(m, n, k, load_family(ra.family)), ra); });

  int h = 7;
  auto* c55 = report->add_subcommand("cor55", "both families for Y_{h,(2)}");
  c55->add_option("--genus", h, "boundary genus h");
  c55->add_option("--n", n, "twist order for the second family");
  add_common(c55);
  c55->callback([&] { rc = finish(report_corollary55(h, n), ra); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "steincalc: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
