#pragma once

// Invariant suite over every root system of rank <= 2.

#include <string>
#include <vector>

namespace nhlab {

struct SelfTestCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct SelfTestResult {
  std::vector<SelfTestCheck> checks;
  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
};

SelfTestResult run_selftest(unsigned threads = 1);

}  // namespace nhlab
