#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hw {

struct SuiteRow {
  std::string name;
  bool pass = false;
  std::string detail;
  bool reported = false; // a discrepancy with the printed closed form, diagnosed and reported
};

struct SuiteResult {
  std::string suite;
  int criterion = 0;
  bool pass = false;
  std::vector<SuiteRow> rows;
  std::vector<std::string> notes; // reported discrepancies and skipped work
  double seconds = 0;
};

struct SuiteOptions {
  int threads = 1;
  bool long_run = false;
  int n = 0; // dn-orbits: restrict to D_n
  std::uint64_t seed = 1;
};

// Suite names in criterion order, followed by aliases.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string &name, const SuiteOptions &opt = {});

nlohmann::json suite_to_json(const SuiteResult &r);
std::string suite_to_text(const SuiteResult &r);

} // namespace hw
