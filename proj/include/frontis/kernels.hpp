#pragma once

#include <cstdint>
#include <vector>

#include "frontis/hilbert.hpp"
#include "frontis/hom.hpp"

namespace frontis::kernels {

// Serial reference implementations and their OpenMP counterparts.  The
// serial versions are the baseline: every parallel kernel must produce the
// identical vector, and the tests and the bench tool hold them to that.

std::vector<std::uint32_t> filter_scan_serial(const hilbert_algebra& h);
std::vector<std::uint32_t> filter_scan_parallel(const hilbert_algebra& h);

std::vector<std::vector<int>> hom_scan_serial(const hilbert_algebra& src, const hilbert_algebra& tgt,
                                              const signature& sig, const unary_map* src_tau,
                                              const unary_map* tgt_tau);
std::vector<std::vector<int>> hom_scan_parallel(const hilbert_algebra& src, const hilbert_algebra& tgt,
                                                const signature& sig, const unary_map* src_tau,
                                                const unary_map* tgt_tau);

std::vector<unary_map> frontal_scan_serial(const hilbert_algebra& h);
std::vector<unary_map> frontal_scan_parallel(const hilbert_algebra& h);

/// Backtracking search over implication tables with 1 pinned at index 0
/// (row 0 = identity, column 0 = constant 0, diagonal = 0).  Yields every
/// valid table, ascending; counts visited nodes against table_search_max.
struct table_search_stats {
  std::uint64_t nodes = 0;
  std::uint64_t tables = 0;
};

std::vector<std::vector<std::uint8_t>> table_scan_serial(int n, table_search_stats* stats = nullptr);
std::vector<std::vector<std::uint8_t>> table_scan_parallel(int n, table_search_stats* stats = nullptr);

}  // namespace frontis::kernels
