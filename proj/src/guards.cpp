#include "frontis/guards.hpp"

#include <cstdlib>
#include <string>

namespace frontis {

namespace {

void read_env_u64(const char* name, std::uint64_t& slot) {
  if (const char* v = std::getenv(name)) slot = std::stoull(v);
}

void read_env_int(const char* name, int& slot) {
  if (const char* v = std::getenv(name)) slot = std::stoi(v);
}

void read_env_bool(const char* name, bool& slot) {
  if (const char* v = std::getenv(name)) slot = std::string(v) != "0";
}

guard_config load_config() {
  guard_config g;
  read_env_u64("FRONTIS_HOM_SEARCH_MAX", g.hom_search_max);
  read_env_u64("FRONTIS_TABLE_SEARCH_MAX", g.table_search_max);
  read_env_int("FRONTIS_FILTER_SCAN_MAX_N", g.filter_scan_max_n);
  read_env_u64("FRONTIS_CLOSURE_MAX", g.closure_max);
  read_env_int("FRONTIS_SPECTRUM_MAX", g.spectrum_max);
  read_env_int("FRONTIS_UPSET_EXHAUSTIVE_MAX", g.upset_exhaustive_max);
  read_env_u64("FRONTIS_SAMPLE_COUNT", g.sample_count);
  read_env_u64("FRONTIS_SAMPLE_SEED", g.sample_seed);
  read_env_int("FRONTIS_ENUMERATE_MAX_N", g.enumerate_max_n);
  read_env_bool("FRONTIS_PARALLEL", g.parallel);
  read_env_u64("FRONTIS_PARALLEL_MIN_WORK", g.parallel_min_work);
  if (g.spectrum_max > 64) g.spectrum_max = 64;  // bitmask width is the hard cap
  if (g.filter_scan_max_n > 31) g.filter_scan_max_n = 31;
  return g;
}

}  // namespace

guard_config& guards() {
  static guard_config g = load_config();
  return g;
}

}  // namespace frontis
