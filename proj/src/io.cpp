#include "steincalc/io.hpp"

#include <fstream>
#include <sstream>

namespace steincalc {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw Error("'" + path + "': " + e.what());
  }
}

json to_json(const PlumbingGraph& g) {
  json vs = json::array();
  for (const auto& v : g.vertices()) vs.push_back({{"id", v.id}, {"weight", v.weight}, {"genus", v.genus}});
  json es = json::array();
  for (const auto& [a, b] : g.edges()) es.push_back({a, b});
  return {{"vertices", vs}, {"edges", es}};
}

PlumbingGraph graph_from_json(const json& j) {
  try {
    std::vector<PlumbingVertex> vs;
    for (const auto& v : j.at("vertices"))
      vs.push_back({v.at("id").get<int>(), v.at("weight").get<long>(), v.value("genus", 0)});
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j.value("edges", json::array())) {
      if (!e.is_array() || e.size() != 2) throw Error("graph: each edge must be a pair of ids");
      es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return PlumbingGraph(std::move(vs), std::move(es));
  } catch (const json::exception& e) {
    throw Error(std::string("graph: ") + e.what());
  }
}

json to_json(const MoveScript& s) {
  json out = json::array();
  for (const auto& m : s) out.push_back({{"op", to_string(m.kind)}, {"args", m.args}});
  return out;
}

MoveScript move_script_from_json(const json& j) {
  try {
    MoveScript s;
    for (const auto& m : j) s.push_back({move_kind_from_string(m.at("op").get<std::string>()),
                                         m.at("args").get<std::vector<int>>()});
    return s;
  } catch (const json::exception& e) {
    throw Error(std::string("move script: ") + e.what());
  }
}

json to_json(const OpenBookDesc& ob) { return {{"page_genus", ob.page_genus}, {"powers", ob.powers}}; }

OpenBookDesc open_book_from_json(const json& j) {
  try {
    OpenBookDesc ob{j.at("page_genus").get<int>(), j.at("powers").get<std::vector<long>>()};
    validate(ob);
    return ob;
  } catch (const json::exception& e) {
    throw Error(std::string("open book: ") + e.what());
  }
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const Integer& x = m(i, k);
      if (x.fits_slong_p()) row.push_back(x.get_si());
      else row.push_back(x.get_str());
    }
    rows.push_back(row);
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error("matrix: expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw Error("matrix: ragged rows");
    for (std::size_t k = 0; k < cols; ++k) {
      const auto& x = j[i][k];
      if (x.is_number_integer()) m(i, k) = x.get<long>();
      else if (x.is_string()) m(i, k) = Integer(x.get<std::string>());
      else throw Error("matrix: entries must be integers");
    }
  }
  return m;
}

json to_json(const SeifertMatrixK& k) { return {{"name", k.name()}, {"matrix", to_json(k.matrix())}}; }

SeifertMatrixK knot_from_json(const json& j) {
  try {
    const IntMatrix v = matrix_from_json(j.at("matrix"));
    if (v.rows() == 0) return SeifertMatrixK(j.value("name", std::string("unknot")), IntMatrix());
    return SeifertMatrixK(j.value("name", std::string("K")), v);
  } catch (const json::exception& e) {
    throw Error(std::string("knot: ") + e.what());
  }
}

std::vector<SeifertMatrixK> family_from_json(const json& j) {
  if (!j.is_array()) throw Error("knot family: expected a JSON list");
  std::vector<SeifertMatrixK> out;
  for (const auto& k : j) out.push_back(knot_from_json(k));
  return out;
}

std::map<std::string, Curve> curves_from_json(const json& j) {
  if (!j.is_object()) throw Error("curve data: expected an object of name -> coefficients");
  std::map<std::string, Curve> out;
  for (const auto& [name, coeffs] : j.items())
    out[name] = Curve{name, coeffs.get<std::vector<long>>(), true};
  return out;
}

}  // namespace steincalc
