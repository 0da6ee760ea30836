#pragma once

#include <string>
#include <vector>

namespace banet {

enum class ClaimStatus { Pass, Fail, Skip };

// One machine-checkable claim with a stable identifier for CI consumption.
struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::Fail;
  std::string detail;
};

inline const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass:
      return "PASS";
    case ClaimStatus::Fail:
      return "FAIL";
    default:
      return "SKIP";
  }
}

inline std::string format_claim_line(const ClaimResult& c) {
  std::string line = c.id;
  line += ' ';
  line += to_string(c.status);
  if (!c.detail.empty()) {
    line += ' ';
    line += c.detail;
  }
  return line;
}

}  // namespace banet
