#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bettiforge/analyzer.hpp"

namespace bettiforge {

struct CorpusExpectation {
  std::optional<std::vector<int>> d, c, b;
  /// Leading entries of d when the full sequence is not recorded.
  std::optional<std::vector<int>> d_prefix;
  std::optional<std::string> resolution_text;
  std::optional<long long> tau;
  std::optional<long long> A_half;
  std::optional<long long> B;
  std::optional<int> t;
  std::vector<std::pair<int, int>> alpha;  // (1-based index, value)
  std::vector<std::pair<int, int>> beta;
  std::optional<std::pair<long long, long long>> tau_window;
  std::optional<long long> suspension_bound;
  std::optional<bool> cube_discrepancy;
  std::optional<int> mdr;
  std::optional<int> nodal_bound;
};

struct CorpusEntry {
  std::string name;
  std::string f_text;
  std::string description;
  /// Excluded from the default run over Q; the default run uses GF(32003).
  bool slow = false;
  bool nodal = false;
  CorpusExpectation expected;
};

const std::vector<CorpusEntry>& corpus_entries();

enum class CorpusField { kDefault, kRationals, kPrime };

struct CorpusResult {
  std::string name;
  std::string field;
  bool pass = false;
  std::vector<std::string> mismatches;
  double seconds = 0;
  std::optional<SurfaceReport> report;
};

/// Runs one entry end to end.  kDefault picks GF(32003) for slow entries
/// and Q otherwise.
CorpusResult run_corpus_entry(const CorpusEntry& entry, CorpusField field = CorpusField::kDefault,
                              std::uint32_t prime = PrimeField::kDefaultPrime);

/// Compares a report with an expectation; one line per mismatch.
std::vector<std::string> compare(const SurfaceReport& r, const CorpusExpectation& e);

}  // namespace bettiforge
