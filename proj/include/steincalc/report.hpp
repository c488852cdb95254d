#pragma once

// End-to-end pipelines that rebuild each construction from the module
// primitives and record every machine-checked fact next to the facts that
// are only cited.

#include "steincalc/knots.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace steincalc {

struct Check {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
  std::string citation;  // bibliography key or "derived-oracle"
};

/// A claim the pipeline relies on but does not compute.
struct Assumption {
  std::string claim;
  std::string citation;
};

struct Report {
  std::string title;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<std::pair<std::string, std::string>> invariants;
  std::vector<Check> checks;
  std::vector<Assumption> assumptions;
  std::vector<std::string> notes;
  std::vector<Report> subreports;

  /// Adds a check comparing string renderings of expected and actual.
  void check(std::string name, const std::string& expected, const std::string& got, std::string citation);
  void check(std::string name, bool ok, std::string expected, std::string got, std::string citation);

  /// pass iff every check here and in every sub-report passes
  bool passed() const;

  nlohmann::json to_json() const;
  std::string to_markdown(int depth = 1) const;
};

Report report_figure1(int genus, const std::vector<long>& powers);

/// Uses demo_family(k) when `family` is empty-optional.
Report report_thm44(int g, int k, long r, std::optional<std::vector<SeifertMatrixK>> family = std::nullopt);

Report report_thm53(int m, long n, int k, std::optional<std::vector<SeifertMatrixK>> family = std::nullopt);

/// Both bullet families for Y_{h,(2)}; `n` is the torsion order used for
/// the second bullet.
Report report_corollary55(int h, long n = 2);

}  // namespace steincalc
