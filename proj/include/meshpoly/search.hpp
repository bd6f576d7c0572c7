#pragma once

// Seeded campaigns. Each trial is a pure function of (master seed, trial
// index); reports list trials in index order whatever the worker count.
//
// Campaign kinds:
//   finite_degree  constant-coefficient T with T((x)_m) in HP>=1, tested on
//                  HP>=1 fixtures of degree <= m
//   bullet         p . q at degree bound d for p, q in HP>=1
//   nice           (a) increasing multiplier candidates through dms_test,
//                  (b) non-monotone triples through alink_witness
//   remark2        {rho^i}, 0 < rho < 1, expected to leave HP>=1
//   lemma1         operators with two or more terms, expected to break HP
//   theorem_suite  the theorem suite, one record per entry

#include "meshpoly/serialize.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace meshpoly {

enum class SearchKind { Nice, FiniteDegree, Bullet, Remark2, Lemma1, TheoremSuite };

std::string search_kind_name(SearchKind k);
/// Accepts both "finite-degree" and "finite_degree". Throws std::invalid_argument.
SearchKind parse_search_kind(const std::string& name);

struct SearchConfig {
  SearchKind kind = SearchKind::FiniteDegree;
  std::uint64_t master_seed = 1;
  std::size_t trials = 500;
  std::size_t max_degree = 6;
  Rational root_range = 5;
  std::size_t i_max = 64;
  Rational tolerance = Rational(1, 1000000);  // display only
  std::size_t jobs = 1;
  /// Records wall time per trial; output is then no longer reproducible.
  bool timing = false;
};

struct TrialRecord {
  std::size_t trial_index = 0;
  Json inputs = Json::object();
  Json verdicts = Json::object();
  /// A counterexample to the conjecture the campaign targets.
  std::optional<Witness> certificate;
  std::string conjecture;
  /// Expected witness that was not found (remark2, lemma1, theorem suite).
  bool inconclusive = false;
  std::optional<double> wall_ms;
};

struct SearchReport {
  SearchConfig config;
  std::vector<TrialRecord> records;

  std::size_t certificates() const;
  std::size_t inconclusive() const;
};

TrialRecord run_trial(const SearchConfig& cfg, std::size_t trial_index);
SearchReport run_search(const SearchConfig& cfg);

Json to_json(const TrialRecord& r);
Json summary_json(const SearchReport& report);
/// One line per trial, then one summary line.
void write_jsonl(std::ostream& out, const SearchReport& report);
/// trial_index,kind,status,conjecture per row.
void write_csv(std::ostream& out, const SearchReport& report);

}  // namespace meshpoly
