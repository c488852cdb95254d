#include "steincalc/io.hpp"
#include "steincalc/smooth4.hpp"

#include <doctest.h>

using namespace steincalc;
using nlohmann::json;

TEST_CASE("graph round-trip") {
  const auto g = star_graph_right(2, {2, 3});
  CHECK(graph_from_json(to_json(g)) == g);
  const auto j = json::parse(R"({"vertices":[{"id":4,"weight":-2}],"edges":[]})");
  CHECK(graph_from_json(j).vertex(4).genus == 0);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges":[]})")), Error);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices":[{"id":0,"weight":1}],"edges":[[0]]})")), Error);
}

TEST_CASE("move script round-trip") {
  const MoveScript s = figure1_witness(1, {3});
  CHECK(move_script_from_json(to_json(s)) == s);
  CHECK_THROWS_AS(move_script_from_json(json::parse(R"([{"op":"twist","args":[1]}])")), Error);
  CHECK_THROWS_AS(move_script_from_json(json::parse(R"([{"args":[1]}])")), Error);
}

TEST_CASE("open book round-trip") {
  const OpenBookDesc ob{3, {2, 5}};
  const auto back = open_book_from_json(to_json(ob));
  CHECK(back.page_genus == 3);
  CHECK(back.powers == ob.powers);
  CHECK_THROWS_AS(open_book_from_json(json::parse(R"({"page_genus":1,"powers":[]})")), Error);
}

TEST_CASE("matrices with large entries") {
  IntMatrix m(1, 2);
  m(0, 0) = Integer("123456789012345678901234567890");
  m(0, 1) = -7;
  CHECK(matrix_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,2],[3]]")), Error);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1.5]]")), Error);
  CHECK_THROWS_AS(matrix_from_json(json::parse("{}")), Error);
}

TEST_CASE("knots and families") {
  const auto k = knot_from_json(to_json(trefoil()));
  CHECK(k.name() == "trefoil");
  CHECK(k.matrix() == trefoil().matrix());
  CHECK(knot_from_json(json::parse(R"({"name":"unknot","matrix":[]})")).genus() == 0);
  const auto fam = family_from_json(json::array({to_json(trefoil()), to_json(figure_eight())}));
  CHECK(fam.size() == 2);
  CHECK_THROWS_AS(family_from_json(json::object()), Error);
  CHECK_THROWS_AS(knot_from_json(json::parse(R"({"matrix":[[1,0],[0,1]]})")), Error);
}

TEST_CASE("curve data") {
  const auto c = curves_from_json(json::parse(R"({"x":[1,0],"y":[0,1]})"));
  CHECK(c.at("y").homology == std::vector<long>{0, 1});
  CHECK_THROWS_AS(curves_from_json(json::array()), Error);
}

TEST_CASE("file errors") {
  CHECK_THROWS_AS(read_text_file("/nonexistent/file.json"), Error);
}

TEST_CASE("bundled data files parse") {
  const std::string dir = STEINCALC_DATA_DIR;
  CHECK(family_from_json(read_json_file(dir + "/demo_family_genus2.json")).size() == 5);
  const auto g = graph_from_json(read_json_file(dir + "/figure1_left_h2_p2.json"));
  const auto s = move_script_from_json(read_json_file(dir + "/figure1_witness_h2_p2.json"));
  CHECK(isomorphic(replay(g, s), star_graph_right(2, {2})));
  TwistWord w;
  w.surface = {2, 0};
  w.letters = parse_word(read_text_file(dir + "/hyperelliptic_g2.txt"));
  w.curves = hyperelliptic_chain(2);
  CHECK(w.letter_count() == 20);
  CHECK(word_action(w) == IntMatrix::identity(4));
}
