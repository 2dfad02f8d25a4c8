#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace intz {

/// One line of a verification report.
struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<CheckItem>& items) {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
}

}  // namespace intz
