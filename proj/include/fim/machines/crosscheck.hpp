#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fim/machines/catalog.hpp"

namespace fim::machines {

struct Mismatch {
  std::string input;
  bool machine_verdict = false;
  bool oracle_verdict = false;
};

struct CrossCheckReport {
  std::string machine;
  std::string oracle;
  std::size_t bound = 0;
  std::size_t tested = 0;
  std::vector<Mismatch> mismatches;  // in enumeration order

  bool passed() const noexcept { return mismatches.empty(); }
};

/// Every sample of the entry's domain within `bound`, in enumeration order.
std::vector<Sample> enumerate_domain(Domain d, std::size_t bound);

/// Exhaustive comparison of an entry against its oracle. Work is split
/// across `workers` threads (0 = hardware concurrency); the mismatch list is
/// identical for any worker count.
CrossCheckReport crosscheck(const CatalogEntry& entry, std::size_t bound,
                            unsigned workers = 0);

/// Tab-separated report: a header record then one record per mismatch.
///   report  <machine> <oracle> <bound> <tested> <mismatches> <pass|fail>
///   mismatch <input> <accept|reject> <accept|reject>
std::string to_tsv(const CrossCheckReport& r);

/// Human-readable summary listing at most `max_listed` mismatches.
std::string to_text(const CrossCheckReport& r, std::size_t max_listed = 20);

}  // namespace fim::machines
