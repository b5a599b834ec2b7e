#pragma once

#include <cstdint>

namespace frontis {

/// Resource limits for the exhaustive scans.  Every limit can be overridden
/// through an environment variable of the same name prefixed with FRONTIS_
/// (e.g. FRONTIS_HOM_SEARCH_MAX); variables are read once, on first use.
struct guard_config {
  std::uint64_t hom_search_max = 10'000'000;    // candidate maps target^source
  std::uint64_t table_search_max = 100'000'000; // visited nodes in table search
  int filter_scan_max_n = 16;                   // carrier size for 2^n subset scans
  std::uint64_t closure_max = 1'000'000;        // elements materialized by a closure
  int spectrum_max = 64;                        // spectrum points (bitmask width)
  int upset_exhaustive_max = 16;                // poset size for full 2^n upset scans
  std::uint64_t sample_count = 1000;            // sampled upsets beyond that size
  std::uint64_t sample_seed = 0x5eedf01d;       // recorded in structured output
  int enumerate_max_n = 5;                      // default cap for algebra enumeration
  bool parallel = true;                         // allow OpenMP kernels
  std::uint64_t parallel_min_work = 1 << 12;    // below this, stay serial
};

guard_config& guards();

}  // namespace frontis
