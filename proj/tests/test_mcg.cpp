#include "generators.hpp"

#include "steincalc/mcg.hpp"

#include <doctest.h>

using namespace steincalc;

namespace {

IntMatrix minus_identity(std::size_t n) { return IntMatrix::diagonal(std::vector<Integer>(n, Integer(-1))); }

}  // namespace

TEST_CASE("intersection form conventions") {
  const IntMatrix j = intersection_form({1, 0});
  // <b, a> = +1 with basis (a, b)
  CHECK(j(1, 0) == 1);
  CHECK(j(0, 1) == -1);
  const IntMatrix jb = intersection_form({1, 3});
  CHECK(jb.rows() == 4);
  CHECK(jb(2, 2) == 0);
  CHECK(jb(3, 0) == 0);
}

TEST_CASE("a single twist acts by a transvection") {
  const SurfaceSpec s{1, 0};
  const Curve a{"a", {1, 0}, true};
  const Curve b{"b", {0, 1}, true};
  const IntMatrix ta = transvection(a, s);
  // b |-> b + <b, a> a = b + a
  CHECK(ta(0, 1) == 1);
  CHECK(ta(1, 1) == 1);
  CHECK(transvection(b, s) * transvection_inverse(b, s) == IntMatrix::identity(2));
  CHECK_THROWS_AS(transvection(Curve{"x", {1, 0, 0}, true}, s), Error);
}

TEST_CASE("word parsing") {
  CHECK(parse_word("c1 c2^2 c3^-1") == std::vector<Letter>{{"c1", 1}, {"c2", 2}, {"c3", -1}});
  CHECK(parse_word("(c1 c2)^2") == std::vector<Letter>{{"c1", 1}, {"c2", 1}, {"c1", 1}, {"c2", 1}});
  CHECK(parse_word("(c1 c2^3)^-1") == std::vector<Letter>{{"c2", -3}, {"c1", -1}});
  CHECK(parse_word("((a b) c)^2").size() == 6);
  CHECK(parse_word("  ").empty());
  CHECK(parse_word("x x") == std::vector<Letter>{{"x", 1}, {"x", 1}});
  CHECK_THROWS_AS(parse_word("(c1"), Error);
  CHECK_THROWS_AS(parse_word("c1^"), Error);
  CHECK_THROWS_AS(parse_word("c1 )"), Error);
  CHECK_THROWS_AS(parse_word("^2"), Error);
  CHECK(format_word(parse_word("c1 c2^2 c3^-1")) == "c1 c2^2 c3^-1");
}

TEST_CASE("word action order: left letter first") {
  const SurfaceSpec s{1, 0};
  TwistWord w;
  w.surface = s;
  w.curves = {{"a", {"a", {1, 0}, true}}, {"b", {"b", {0, 1}, true}}};
  w.letters = parse_word("a b");
  CHECK(word_action(w) == transvection(w.curves["b"], s) * transvection(w.curves["a"], s));
  w.letters = parse_word("a^2 a^-2");
  CHECK(word_action(w) == IntMatrix::identity(2));
  w.letters = parse_word("z");
  CHECK_THROWS_AS(word_action(w), Error);
}

TEST_CASE("hyperelliptic chain and relations for g = 1..5") {
  for (int g = 1; g <= 5; ++g) {
    const auto chain = hyperelliptic_chain(g);
    CHECK(chain.size() == static_cast<std::size_t>(2 * g + 1));
    CHECK(chain_consistent(chain, {g, 0}));
    const auto n = static_cast<std::size_t>(2 * g);
    CHECK(word_action(hyperelliptic_half_word(g)) == minus_identity(n));
    CHECK(word_action(hyperelliptic_word(g)) == IntMatrix::identity(n));
    CHECK(hyperelliptic_word(g).letter_count() == 8L * g + 4);
  }
  CHECK_THROWS_AS(hyperelliptic_chain(0), Error);
}

TEST_CASE("chain consistency detects a broken chain") {
  auto chain = hyperelliptic_chain(2);
  chain["c3"].homology = {1, 0, 0, 0};
  CHECK_FALSE(chain_consistent(chain, {2, 0}));
}

TEST_CASE("Korkmaz word is counting-only without curve data") {
  for (int m = 1; m <= 4; ++m) {
    const auto w = korkmaz_word(m);
    CHECK(w.letter_count() == 2L * (2 * m + 1) + 10);
    CHECK(w.curves.empty());
    CHECK_THROWS_AS(word_action(w), Error);
  }
  CHECK_THROWS_AS(korkmaz_word(0), Error);
}

TEST_CASE("Euler characteristic of Lefschetz fibrations") {
  for (long g = 1; g <= 5; ++g) CHECK(lf_euler_characteristic(g, 8 * g + 4) == 4 * g + 8);
  for (long m = 1; m <= 4; ++m) CHECK(lf_euler_characteristic(2 * m + 1, 2 * (2 * m + 1) + 10) == 12 - 4 * m);
  CHECK(lf_euler_characteristic(0, 0) == 4);
  CHECK_THROWS_AS(lf_euler_characteristic(-1, 3), Error);
  CHECK_THROWS_AS(lf_euler_characteristic(1, -3), Error);
}

TEST_CASE("fiber class pairings") {
  for (int g = 1; g <= 5; ++g) {
    const auto f = fiber_class(g);
    CHECK(pair(f, f) == 0);
    for (int i = 2; i <= 4 * g + 5; ++i) CHECK(pair(f, exceptional_class(g, i)) == 1);
    CHECK(pair(f, exceptional_class(g, 1)) == g);
    CHECK(pair(f, hyperplane_class(g) - exceptional_class(g, 1)) == 2);
    CHECK(pair(exceptional_class(g, 2), exceptional_class(g, 2)) == -1);
    CHECK(section_count(g) == 4L * g + 4);
  }
  CHECK_THROWS_AS(exceptional_class(2, 0), Error);
  CHECK_THROWS_AS(exceptional_class(2, 14), Error);
  CHECK_THROWS_AS(pair(fiber_class(1), fiber_class(2)), Error);
}

TEST_CASE("transvections are symplectic on random curves") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const SurfaceSpec s{static_cast<int>(gen::uniform(rng, 1, 4)), static_cast<int>(gen::uniform(rng, 0, 3))};
    std::vector<long> c(s.h1_rank());
    for (auto& x : c) x = gen::uniform(rng, -3, 3);
    const IntMatrix t = transvection({"c", c, true}, s);
    const IntMatrix j = intersection_form(s);
    CHECK(t.transpose() * j * t == j);
    CHECK(t * transvection_inverse({"c", c, true}, s) == IntMatrix::identity(s.h1_rank()));
  }
}
