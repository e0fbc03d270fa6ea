#pragma once

#include <string>
#include <vector>

namespace treesplit {

// Verdict vocabulary: Verified is reserved for exactly decided facts;
// bounded searches that find nothing report NoViolationUpTo.
enum class Verdict {
  Verified,
  ViolationWitness,
  NoViolationUpTo,
};

const char* verdict_name(Verdict v);

struct CheckReport {
  std::string name;
  std::string bounds;  // e.g. "word_bound=3 radius=6"
  Verdict verdict = Verdict::Verified;
  std::string witness;  // violation data or positive witnesses
  std::string note;

  bool passed() const { return verdict != Verdict::ViolationWitness; }

  // Stable single-line rendering used by the CLI and tests.
  std::string line() const;
};

std::string render_reports(const std::vector<CheckReport>& reports);

// Ordered collection of sub-check reports with a roll-up verdict.
struct SuiteResult {
  std::string name;
  std::vector<CheckReport> reports;

  void add(CheckReport r) { reports.push_back(std::move(r)); }
  bool passed() const;
  // Worst sub-verdict; witness names the first failing check.
  CheckReport summary() const;
  std::string render() const;
};

}  // namespace treesplit
