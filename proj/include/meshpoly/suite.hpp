#pragma once

// The theorem suite: each entry runs one family of seeded checks and reports
// pass/fail with the first failing witness. Entries that search for witnesses
// pass when every expected witness is found and replays.

#include "meshpoly/verify.hpp"

#include <functional>
#include <string>
#include <vector>

namespace meshpoly {

struct SuiteResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::size_t checked = 0;
  std::string detail;
  std::optional<Witness> failure;
};

struct SuiteOptions {
  std::uint64_t seed = 7;
  /// Scales the fixture counts; 500 gives the reference sizes.
  std::size_t trials = 500;
};

SuiteResult suite_herpou_sufficiency(const SuiteOptions& opt);
SuiteResult suite_herpou_necessity(const SuiteOptions& opt);
SuiteResult suite_fd_riesz(const SuiteOptions& opt);
SuiteResult suite_riesz(const SuiteOptions& opt);
SuiteResult suite_dms(const SuiteOptions& opt);
SuiteResult suite_brenti_altn_signs(const SuiteOptions& opt);
SuiteResult suite_quadratic(const SuiteOptions& opt);
SuiteResult suite_alink(const SuiteOptions& opt);
SuiteResult suite_remark2(const SuiteOptions& opt);
SuiteResult suite_lemma1(const SuiteOptions& opt);

struct SuiteEntry {
  std::string id;
  std::function<SuiteResult(const SuiteOptions&)> run;
};
const std::vector<SuiteEntry>& theorem_suite();

std::vector<SuiteResult> run_theorem_suite(const SuiteOptions& opt);

}  // namespace meshpoly
