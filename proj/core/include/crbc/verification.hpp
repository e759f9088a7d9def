#ifndef CRBC_VERIFICATION_HPP
#define CRBC_VERIFICATION_HPP

/// Self-verification suite: the numeric anchors, identities, reductions,
/// monotonicity, degradedness and dominance properties the library must
/// satisfy, each with a pinned tolerance. Runs deterministically (fixed
/// seeds) and prints one pass/fail line per criterion.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace crbc::verification {

struct CheckResult {
  std::string id;      // "01".."11"
  std::string name;
  std::string tags;    // space-separated: gaussian / dmc / frontier
  bool passed = false;
  std::string detail;
  double millis = 0.0;
};

/// Runs every criterion whose id, name or tags contain `filter`
/// (empty filter = all).
std::vector<CheckResult> run_all(std::string_view filter = {});

bool all_passed(const std::vector<CheckResult>& results);

/// One line per criterion plus a summary line.
void print_table(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace crbc::verification

#endif  // CRBC_VERIFICATION_HPP
