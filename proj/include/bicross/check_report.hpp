#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bicross {

// Outcome of an exact check: empty failure list means pass.
struct CheckReport {
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void require(bool condition, std::string clause) {
    if (!condition) failures.push_back(std::move(clause));
  }
  void merge(const CheckReport& other, const std::string& prefix) {
    for (const auto& f : other.failures) failures.push_back(prefix + f);
  }
};

}  // namespace bicross
