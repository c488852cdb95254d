#pragma once

#include <map>
#include <string>

namespace steincalc {

struct Citation {
  std::string source;     // literature pointer
  std::string statement;  // what is being relied on
};

/// Citation keys used by records and reports.
const std::map<std::string, Citation>& bibliography();

/// True for bibliography keys and for the tag "derived-oracle".
bool citation_resolves(const std::string& key);

inline constexpr const char* kDerivedOracle = "derived-oracle";

}  // namespace steincalc
