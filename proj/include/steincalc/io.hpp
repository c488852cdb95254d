#pragma once

// JSON formats:
//   graph        {"vertices":[{"id":0,"weight":0,"genus":2}, ...], "edges":[[0,1], ...]}
//   move script  [{"op":"blow_up_on_edge","args":[0,1]}, ...]
//   open book    {"page_genus":h, "powers":[p1, ..., pr]}
//   knot         {"name":"trefoil", "matrix":[[-1,1],[0,-1]]}
//   knot family  [knot, knot, ...]
//   curve data   {"name":[coefficients], ...}

#include "steincalc/knots.hpp"
#include "steincalc/mcg.hpp"
#include "steincalc/plumbing.hpp"
#include "steincalc/seifert.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace steincalc {

nlohmann::json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

nlohmann::json to_json(const PlumbingGraph& g);
PlumbingGraph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MoveScript& s);
MoveScript move_script_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OpenBookDesc& ob);
OpenBookDesc open_book_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SeifertMatrixK& k);
SeifertMatrixK knot_from_json(const nlohmann::json& j);
std::vector<SeifertMatrixK> family_from_json(const nlohmann::json& j);

std::map<std::string, Curve> curves_from_json(const nlohmann::json& j);

}  // namespace steincalc
