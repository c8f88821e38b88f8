#pragma once

#include <string>
#include <vector>

#include "ellgen/json_io.hpp"

namespace ellgen {

struct SuiteCheck {
  std::string name;
  bool pass = false;
  Json detail;
};

// Suites: all, genus, cusp, localizer, obstruction, io.
std::vector<std::string> suite_names();
std::vector<SuiteCheck> run_suite(const std::string& suite, int qorder);
Json suite_to_json(const std::vector<SuiteCheck>& checks);

}  // namespace ellgen
