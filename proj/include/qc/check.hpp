#pragma once

// Shared result type for instance checks: a verdict plus witnesses and
// dimension tables, rendered later by the report layer.

#include <map>
#include <string>
#include <vector>

namespace qc {

enum class Verdict { Pass, Fail, Undecided };

inline const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "undecided";
  }
}

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> witnesses;  // failure/undecided evidence
  std::map<std::string, int> dims;     // named dimension table
  std::vector<std::string> notes;      // provenance: route fired, sampled vs total

  void fail(const std::string& w) {
    verdict = Verdict::Fail;
    witnesses.push_back(w);
  }
  void undecide(const std::string& w) {
    if (verdict != Verdict::Fail) verdict = Verdict::Undecided;
    witnesses.push_back(w);
  }
  bool passed() const { return verdict == Verdict::Pass; }
};

}  // namespace qc
