#pragma once
// Named verification suites over one (algebra, d) pair.

#include <string>
#include <vector>

#include "json.hpp"
#include "dx/corresp.hpp"

namespace dx {

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  bool ok() const;
};

const std::vector<std::string>& suite_names();

// suite is one of suite_names() or "all"; throws std::invalid_argument otherwise.
std::vector<SuiteResult> run_suites(const Window& w, const std::string& algebra, const std::string& suite);

// All torsion classes of the window (not only positive ones), by closure search.
std::vector<Subcat> all_torsion_classes(const Window& w);

nlohmann::json report_json(const Window& w, const std::string& algebra, const std::vector<SuiteResult>& res);

}  // namespace dx
