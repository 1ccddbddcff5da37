#pragma once

#include <string>

#include <json.hpp>

#include "residua/enumerate.hpp"
#include "residua/generalized.hpp"
#include "residua/poset.hpp"
#include "residua/residuation.hpp"

namespace residua {

/// Report JSON plus the aggregate pass/fail used for the exit code.
struct Report {
  nlohmann::json body;
  bool ok = true;
};

struct GeneralizedOptions {
  std::string direction = "both";  // "15", "16" or "both"
  std::string method = "both";     // "direct", "reduction" or "both"
  int pair_cap = kDefaultPairCap;
  int triple_cap = kDefaultTripleCap;
};

Report report_classify(const StructuredPoset& sp, int threads = 1);
Report report_residuate(const StructuredPoset& sp, Scheme scheme, int threads = 1);
Report report_tables(const StructuredPoset& sp, Scheme scheme);
Report report_generalized(const StructuredPoset& sp, const GeneralizedOptions& opt,
                          int threads = 1);
Report report_enumerate(const EnumSpec& spec, const std::string& claim = "",
                        const std::vector<StructuredPoset>& fixtures = {});

/// Plain-text rendering of a report, subsets printed in element order.
std::string render_human(const nlohmann::json& body);

}  // namespace residua
