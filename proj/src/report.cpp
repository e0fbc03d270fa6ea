#include "treesplit/report.hpp"

namespace treesplit {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified:
      return "Verified";
    case Verdict::ViolationWitness:
      return "ViolationWitness";
    case Verdict::NoViolationUpTo:
      return "NoViolationUpTo";
  }
  return "?";
}

std::string CheckReport::line() const {
  std::string out = "check=" + name;
  if (!bounds.empty()) out += " bounds=[" + bounds + "]";
  out += " verdict=";
  out += verdict_name(verdict);
  if (!witness.empty()) out += " witness=[" + witness + "]";
  if (!note.empty()) out += " note=[" + note + "]";
  return out;
}

std::string render_reports(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const CheckReport& r : reports) {
    out += r.line();
    out += '\n';
  }
  return out;
}

bool SuiteResult::passed() const {
  for (const CheckReport& r : reports) {
    if (!r.passed()) return false;
  }
  return true;
}

CheckReport SuiteResult::summary() const {
  CheckReport out;
  out.name = name;
  out.bounds = "checks=" + std::to_string(reports.size());
  out.verdict = Verdict::Verified;
  for (const CheckReport& r : reports) {
    if (r.verdict == Verdict::ViolationWitness) {
      out.verdict = Verdict::ViolationWitness;
      out.witness = r.name;
      return out;
    }
    if (r.verdict == Verdict::NoViolationUpTo) {
      out.verdict = Verdict::NoViolationUpTo;
    }
  }
  return out;
}

std::string SuiteResult::render() const {
  std::string out = render_reports(reports);
  out += summary().line();
  out += '\n';
  return out;
}

}  // namespace treesplit
