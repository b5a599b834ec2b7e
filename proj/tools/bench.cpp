// Times the OpenMP kernels against their serial reference implementations
// and fails when any pair disagrees.
#include <chrono>
#include <cstdio>
#include <string>

#include "frontis/enumerate.hpp"
#include "frontis/guards.hpp"
#include "frontis/hilbert.hpp"
#include "frontis/kernels.hpp"
#include "frontis/poset.hpp"

using namespace frontis;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

template <typename F, typename G>
void bench_pair(const std::string& name, F serial, G parallel) {
  auto t0 = std::chrono::steady_clock::now();
  auto a = serial();
  double serial_ms = ms_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto b = parallel();
  double parallel_ms = ms_since(t0);
  bool same = a == b;
  if (!same) ++failures;
  std::printf("%-22s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name.c_str(),
              serial_ms, parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              same ? "agree" : "DISAGREE");
}

hilbert_algebra chain(int n) {
  hilbert_algebra h;
  h.n = n;
  h.one = n - 1;
  h.zero = 0;
  h.imp.assign(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      h.imp[a * n + b] = static_cast<std::uint8_t>(a <= b ? n - 1 : b);
  h.name = "chain" + std::to_string(n);
  return h;
}

finite_poset antichain(int n) {
  return finite_poset::from_covers(n, {});
}

}  // namespace

int main() {
  guards().parallel = true;

  auto boolean16 = upset_algebra(antichain(4));  // 16 elements, 2^16 subsets
  bench_pair(
      "filter scan  n=16", [&] { return kernels::filter_scan_serial(boolean16); },
      [&] { return kernels::filter_scan_parallel(boolean16); });

  auto src = chain(5);
  auto tgt = chain(10);
  signature sig;
  bench_pair(
      "hom scan  10^5", [&] { return kernels::hom_scan_serial(src, tgt, sig, nullptr, nullptr); },
      [&] { return kernels::hom_scan_parallel(src, tgt, sig, nullptr, nullptr); });

  auto seven = chain(7);
  bench_pair(
      "frontal scan  7^7", [&] { return kernels::frontal_scan_serial(seven); },
      [&] { return kernels::frontal_scan_parallel(seven); });

  bench_pair(
      "table scan  n=5", [&] { return kernels::table_scan_serial(5); },
      [&] { return kernels::table_scan_parallel(5); });

  if (failures) {
    std::printf("%d kernel pair(s) disagree\n", failures);
    return 1;
  }
  return 0;
}
