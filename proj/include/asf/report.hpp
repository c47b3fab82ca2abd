#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace asf {

/// One row of the counting table for F_q.
struct CountRow {
  std::uint64_t q;
  std::uint32_t p;
  int n;
  std::uint64_t index;         // [K : wp(K)] from the coset decomposition
  std::uint64_t index_oracle;  // |K| / |wp(K)| from an exhaustive image scan
  std::uint64_t count;         // orbit formula
  std::optional<std::uint64_t> count_oracle;  // isomorphism classes, small q only
  std::uint64_t trace_zero;    // #{a : Tr(a) = 0}
  std::uint64_t solvable;      // #{a : x^p - x = a has a root}, by scan
  bool agree;
};

struct CheckLine {
  std::string name;
  bool ok;
  std::string detail;
};

struct FullReport {
  std::uint64_t max_q;
  std::vector<CountRow> rows;
  std::vector<CheckLine> checks;

  bool ok() const;
};

/// Recomputes the counting table for every prime power q <= max_q and runs
/// the property checks, each through a formula path and an oracle.
FullReport report_all(std::uint64_t max_q);

}  // namespace asf
