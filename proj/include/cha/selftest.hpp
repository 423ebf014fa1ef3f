#ifndef CHA_SELFTEST_HPP
#define CHA_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cha {

struct PropertyReport {
  std::string name;
  int cases = 0;
  int failures = 0;
  double worst = 0.0;   // worst residual seen, in the property's own metric
  std::string repro;    // json of the first failing input, empty if none
};

struct SelftestReport {
  std::vector<PropertyReport> properties;
  bool all_pass() const {
    for (const auto& p : properties)
      if (p.failures > 0) return false;
    return true;
  }
};

/// Runs the randomized invariant suites (bracket axioms, closed forms vs
/// oracles, group law) with `cases` draws per property. Deterministic for a
/// fixed seed.
SelftestReport run_selftest(int n, int cases, std::uint64_t seed);

} // namespace cha

#endif
