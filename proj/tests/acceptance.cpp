// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include "generators.hpp"
#include "oracle.hpp"

#include "steincalc/mcg.hpp"
#include "steincalc/report.hpp"
#include "steincalc/seifert.hpp"
#include "steincalc/smooth4.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace steincalc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

template <class T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Outcome euler_double_counts() {
  Outcome o;
  for (long g = 1; g <= 5; ++g) {
    const long chi = lf_euler_characteristic(g, 8 * g + 4);
    o.require(chi == 4 * g + 8, "g=" + show(g) + ": chi=" + show(chi));
    o.require(chi == oracle::rational_surface(4 * g + 5).first, "rational surface count at g=" + show(g));
    o.require(hyperelliptic_word(static_cast<int>(g)).letter_count() == 8 * g + 4, "word length at g=" + show(g));
  }
  for (long m = 1; m <= 4; ++m) {
    const long g = 2 * m + 1;
    const long chi = lf_euler_characteristic(g, 2 * g + 10);
    o.require(chi == 12 - 4 * m, "m=" + show(m) + ": chi=" + show(chi));
    o.require(chi == 2 * (2 - 2 * m) + 8, "product count at m=" + show(m));
    o.require(korkmaz_word(static_cast<int>(m)).letter_count() == 2 * g + 10, "Korkmaz length at m=" + show(m));
  }
  return o;
}

Outcome homological_relations() {
  Outcome o;
  for (int g = 1; g <= 5; ++g) {
    const auto n = static_cast<std::size_t>(2 * g);
    o.require(word_action(hyperelliptic_word(g)) == IntMatrix::identity(n), "full word at g=" + show(g));
    o.require(word_action(hyperelliptic_half_word(g)) == IntMatrix::diagonal(std::vector<Integer>(n, Integer(-1))),
              "half word at g=" + show(g));
  }
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 200; ++trial) {
    const SurfaceSpec s{static_cast<int>(gen::uniform(rng, 1, 5)), static_cast<int>(gen::uniform(rng, 0, 3))};
    std::vector<long> c(s.h1_rank());
    for (auto& x : c) x = gen::uniform(rng, -4, 4);
    const IntMatrix t = transvection({"c", c, true}, s);
    const IntMatrix j = intersection_form(s);
    o.require(t.transpose() * j * t == j, "transvection not symplectic, trial " + show(trial));
  }
  return o;
}

Outcome fiber_class_pairings() {
  Outcome o;
  for (int g = 1; g <= 5; ++g) {
    const auto f = fiber_class(g);
    o.require(pair(f, f) == 0, "[F]^2 at g=" + show(g));
    for (int i = 2; i <= 4 * g + 5; ++i)
      o.require(pair(f, exceptional_class(g, i)) == 1, "[F].e_" + show(i) + " at g=" + show(g));
    o.require(pair(f, hyperplane_class(g) - exceptional_class(g, 1)) == 2, "[F].(h-e1) at g=" + show(g));
  }
  return o;
}

Outcome figure1_sweep() {
  Outcome o;
  std::vector<long> powers;
  std::function<void(int, std::size_t)> sweep = [&](int h, std::size_t r) {
    if (powers.size() == r) {
      const auto left = star_graph_left(h, powers);
      const auto right = star_graph_right(h, powers);
      const auto hl = boundary_homology(left);
      const auto hr = boundary_homology(right);
      const std::string tag = "h=" + show(h) + " p=" + show(powers.size());
      o.require(hl == hr, tag + ": homology differs");
      o.require(hr.rank == 2 * h, tag + ": rank");
      const auto s = star_to_seifert(right, 0);
      o.require(s == openbook_manifold({h, powers}), tag + ": Seifert data differs from open book");
      Rational e(0);
      for (long p : powers) e -= Rational(1, p);
      o.require(euler_number(s) == e && e < 0, tag + ": Euler number");
      o.require(grauert_check(right), tag + ": right graph not negative definite");
      o.require(openbook_homology({h, powers}) == hr, tag + ": open book homology");
      return;
    }
    // Non-decreasing tuples cover every multiset once.
    const long lo = powers.empty() ? 2 : powers.back();
    for (long p = lo; p <= 6; ++p) {
      powers.push_back(p);
      sweep(h, r);
      powers.pop_back();
    }
  };
  for (int h = 0; h <= 3; ++h)
    for (std::size_t r = 1; r <= 4; ++r) sweep(h, r);

  // The bundled witness script connects both graphs.
  for (int h = 0; h <= 3; ++h) {
    const std::vector<long> p{2, 3, 6};
    o.require(isomorphic(replay(star_graph_left(h, p), figure1_witness(h, p)), star_graph_right(h, p)),
              "witness replay at h=" + show(h));
  }
  return o;
}

Outcome move_invariance() {
  Outcome o;
  std::mt19937 rng(1729);
  int applied = 0;
  while (applied < 1000) {
    PlumbingGraph g = gen::random_tree(rng, static_cast<int>(gen::uniform(rng, 1, 8)));
    const auto h0 = boundary_homology(g);
    const Integer d0 = abs(determinant(intersection_matrix(g)));
    for (int step = 0; step < 10 && !g.empty() && applied < 1000; ++step, ++applied) {
      const Move m = gen::random_move(rng, g);
      const int sig = signature(intersection_matrix(g));
      g = apply_move(g, m);
      const int expected = sig + (m.kind == MoveKind::BlowDown ? 1 : -1);
      o.require(boundary_homology(g) == h0, "homology changed at move " + show(applied));
      o.require(abs(determinant(intersection_matrix(g))) == d0, "|det| changed at move " + show(applied));
      o.require(signature(intersection_matrix(g)) == expected, "signature shift at move " + show(applied));
    }
  }
  return o;
}

const Check* find_check(const Report& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

Outcome thm44_instance() {
  Outcome o;
  const auto fam = demo_family(2);
  o.require(fam.size() == 5, "demo family size");
  const auto r = report_thm44(2, 2, 1, fam);
  o.require(r.passed(), "report verdict fail");
  // (45, -24) from the Mayer-Vietoris oracle on X(2,2) = (36, -24).
  const auto [chi, sigma] = oracle::filling_chi_sigma(36, -24, 6, 1, -2);
  o.require(chi == 45 && sigma == -24, "oracle disagrees with frozen (45, -24)");
  const auto* c = find_check(r, "(chi, sigma) constant");
  o.require(c && c->got == "(45, -24)", "constant (chi, sigma)");
  const auto* b = find_check(r, "boundary Seifert data");
  o.require(b && b->got == to_string(SeifertData(6, -1, {{2, 1}})), "boundary Y_{6,(2)}");
  const auto* e = find_check(r, "boundary Euler number");
  o.require(e && e->got == "-1/2", "e = -1/2");
  const auto* s = find_check(r, "boundary is a singularity link");
  o.require(s && s->pass, "singularity link flag");
  const auto* k = find_check(r, "canonical contact");
  o.require(k && k->pass, "canonical flag");
  const auto* d = find_check(r, "det of intersection form");
  o.require(d && d->got == "0", "det = 0");
  const auto* p = find_check(r, "distinguisher pairs distinct");
  o.require(p && p->got == "10/10", "10/10 distinct pairs");
  return o;
}

Outcome thm53_instance() {
  Outcome o;
  const auto r = report_thm53(1, 3, 2);
  o.require(r.passed(), "report verdict fail");
  const auto w = fiber_sum(make_W(1), make_W(1), FiberSumTwist::n_twist(3));
  o.require(w.euler_char == 24 && w.signature == -16, "W_3(1) record");
  o.require(w.euler_char == oracle::fiber_sum_chi(8, 8, 3), "fiber-sum cell count");
  const auto* c = find_check(r, "(chi, sigma) of W_3(1)");
  o.require(c && c->got == "(24, -16)", "(24, -16) check");
  const auto* g = find_check(r, "fibre genus");
  o.require(g && g->pass, "fibre genus check");
  o.require(knot_surgery(w, demo_family(2).front(), true).fiber_genus == 7, "fibre genus 7");
  const auto* b = find_check(r, "boundary Seifert data");
  o.require(b && b->got == to_string(SeifertData(7, -1, {{2, 1}})), "boundary Y_{7,(2)}");
  const auto* t = find_check(r, "pi_1 tag of W_3(1)");
  o.require(t && t->got == "Z+Z_3" && !t->citation.empty(), "pi_1 tag with citation");
  const auto* p = find_check(r, "distinguisher pairs distinct");
  o.require(p && p->pass, "distinguishers distinct");
  return o;
}

Outcome alexander_algebra() {
  Outcome o;
  o.require(alexander(trefoil()) == parse_laurent("t - 1 + t^-1"), "trefoil");
  const auto e = alexander(figure_eight());
  o.require(e == parse_laurent("t - 3 + t^-1") || e == -parse_laurent("t - 3 + t^-1"), "figure-eight");
  o.require(alexander(SeifertMatrixK()) == LaurentPoly(1), "unknot");
  std::mt19937 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const auto k = gen::random_knot(rng, static_cast<int>(gen::uniform(rng, 1, 3)), "k");
    const auto d = alexander(k);
    o.require(d.is_symmetric(), "asymmetric at trial " + show(trial));
    const Integer at1 = d.evaluate_at_one();
    o.require(at1 == 1 || at1 == -1, "Delta(1) at trial " + show(trial));
    const auto raw = alexander_raw(k);
    o.require(raw.evaluate_at_one() == static_cast<long>(oracle::alexander_at(gen::to_oracle(k.matrix()), 1)),
              "oracle at t=1");
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = gen::random_knot(rng, static_cast<int>(gen::uniform(rng, 1, 2)), "a");
    const auto b = gen::random_knot(rng, static_cast<int>(gen::uniform(rng, 1, 2)), "b");
    o.require(alexander(connected_sum(a, b)) == (alexander(a) * alexander(b)).normalized(),
              "multiplicativity at trial " + show(trial));
  }
  return o;
}

Outcome surgery_invariance() {
  Outcome o;
  std::mt19937 rng(99);
  const auto x2 = fiber_sum(make_X_g1(2), make_X_g1(2), FiberSumTwist::untwisted());
  const auto w3 = fiber_sum(make_W(1), make_W(1), FiberSumTwist::n_twist(3));
  for (int trial = 0; trial < 100; ++trial) {
    const auto& base = trial % 2 ? w3 : x2;
    const auto k1 = gen::random_knot(rng, static_cast<int>(gen::uniform(rng, 1, 2)), "k1");
    const auto k2 = gen::random_knot(rng, static_cast<int>(gen::uniform(rng, 1, 2)), "k2");
    const auto once = knot_surgery(base, k1, true);
    const auto twice = knot_surgery(once, k2, true);
    const std::string tag = "trial " + show(trial);
    o.require(twice.euler_char == base.euler_char && twice.signature == base.signature, tag + ": (chi, sigma)");
    const auto expected = (once.sw_distinguisher * substitute_t_squared(alexander(k2))).normalized();
    o.require(twice.sw_distinguisher == expected, tag + ": distinguisher not multiplied");
    o.require(*twice.fiber_genus == *base.fiber_genus + 2L * (k1.genus() + k2.genus()), tag + ": fibre genus");
  }
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Euler-characteristic double counts", 1, euler_double_counts},
      {2, "homological relation certificates", 5, homological_relations},
      {3, "fiber-class pairings", 1, fiber_class_pairings},
      {4, "star plumbing equivalence sweep", 30, figure1_sweep},
      {5, "move-invariance property suite", 30, move_invariance},
      {6, "simply connected filling desk instance (g,k,r) = (2,2,1)", 5, thm44_instance},
      {7, "Z+Z_n filling desk instance (m,n,k) = (1,3,2)", 5, thm53_instance},
      {8, "Alexander golden values and algebra", 10, alexander_algebra},
      {9, "knot-surgery invariance", 5, surgery_invariance},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) {
      o.ok = false;
      o.detail = "time limit " + show(c.limit_seconds) + " s exceeded";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << secs << " s)";
    if (!o.ok) line << " -- " << o.detail;
    std::cout << line.str() << '\n';
    failures += o.ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : show(failures) + " criterion/criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
