#include "frontis/kernels.hpp"

#include <atomic>
#include <cstring>

#include "frontis/error.hpp"
#include "frontis/frontal.hpp"
#include "frontis/guards.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frontis::kernels {

namespace {

bool mask_is_filter(const hilbert_algebra& h, std::uint32_t m) {
  if (!((m >> h.one) & 1u)) return false;
  for (int a = 0; a < h.n; ++a) {
    if (!((m >> a) & 1u)) continue;
    for (int b = 0; b < h.n; ++b)
      if (!((m >> b) & 1u) && ((m >> h.imp_at(a, b)) & 1u)) return false;
  }
  return true;
}

void check_filter_scan_guard(const hilbert_algebra& h) {
  if (h.n > guards().filter_scan_max_n)
    throw guard_error("filter scan refused: carrier size " + std::to_string(h.n) +
                      " exceeds guard " + std::to_string(guards().filter_scan_max_n));
}

}  // namespace

std::vector<std::uint32_t> filter_scan_serial(const hilbert_algebra& h) {
  check_filter_scan_guard(h);
  std::vector<std::uint32_t> out;
  std::uint32_t total = 1u << h.n;
  for (std::uint32_t m = 0; m < total; ++m)
    if (mask_is_filter(h, m)) out.push_back(m);
  return out;
}

std::vector<std::uint32_t> filter_scan_parallel(const hilbert_algebra& h) {
  check_filter_scan_guard(h);
  std::uint64_t total = 1ull << h.n;
#ifdef _OPENMP
  int chunks = omp_get_max_threads() * 4;
#else
  int chunks = 1;
#endif
  std::uint64_t step = (total + chunks - 1) / chunks;
  std::vector<std::vector<std::uint32_t>> parts(chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int c = 0; c < chunks; ++c) {
    std::uint64_t lo = c * step, hi = std::min(total, lo + step);
    for (std::uint64_t m = lo; m < hi; ++m)
      if (mask_is_filter(h, static_cast<std::uint32_t>(m)))
        parts[c].push_back(static_cast<std::uint32_t>(m));
  }
  std::vector<std::uint32_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

namespace {

// Maps are ranked with map[0] as the most significant digit so that rank
// order equals lexicographic order of the arrays.
void decode_map(std::uint64_t rank, int s, int t, std::vector<int>& map) {
  for (int i = s - 1; i >= 0; --i) {
    map[i] = static_cast<int>(rank % t);
    rank /= t;
  }
}

bool map_is_hom(const hilbert_algebra& src, const hilbert_algebra& tgt, const signature& sig,
                const unary_map* src_tau, const unary_map* tgt_tau, const std::vector<int>& f) {
  if (f[src.one] != tgt.one) return false;
  if (sig.zero && f[*src.zero] != *tgt.zero) return false;
  for (int a = 0; a < src.n; ++a)
    for (int b = 0; b < src.n; ++b) {
      if (f[src.imp_at(a, b)] != tgt.imp_at(f[a], f[b])) return false;
      if (sig.meet && f[src.meet_at(a, b)] != tgt.meet_at(f[a], f[b])) return false;
    }
  if (sig.tau)
    for (int a = 0; a < src.n; ++a)
      if (f[(*src_tau)(a)] != (*tgt_tau)(f[a])) return false;
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > limit / base + 1) return limit + 1;
    r *= base;
    if (r > limit) return limit + 1;
  }
  return r;
}

void check_hom_guard(const hilbert_algebra& src, const hilbert_algebra& tgt) {
  auto total = checked_pow(tgt.n, src.n, guards().hom_search_max);
  if (total > guards().hom_search_max)
    throw guard_error("homomorphism scan refused: " + std::to_string(tgt.n) + "^" +
                      std::to_string(src.n) + " candidates exceed guard " +
                      std::to_string(guards().hom_search_max));
}

}  // namespace

std::vector<std::vector<int>> hom_scan_serial(const hilbert_algebra& src, const hilbert_algebra& tgt,
                                              const signature& sig, const unary_map* src_tau,
                                              const unary_map* tgt_tau) {
  check_hom_guard(src, tgt);
  std::uint64_t total = checked_pow(tgt.n, src.n, guards().hom_search_max);
  std::vector<std::vector<int>> out;
  std::vector<int> f(src.n);
  for (std::uint64_t r = 0; r < total; ++r) {
    decode_map(r, src.n, tgt.n, f);
    if (map_is_hom(src, tgt, sig, src_tau, tgt_tau, f)) out.push_back(f);
  }
  return out;
}

std::vector<std::vector<int>> hom_scan_parallel(const hilbert_algebra& src, const hilbert_algebra& tgt,
                                                const signature& sig, const unary_map* src_tau,
                                                const unary_map* tgt_tau) {
  check_hom_guard(src, tgt);
  std::uint64_t total = checked_pow(tgt.n, src.n, guards().hom_search_max);
#ifdef _OPENMP
  int chunks = omp_get_max_threads() * 4;
#else
  int chunks = 1;
#endif
  std::uint64_t step = (total + chunks - 1) / chunks;
  std::vector<std::vector<std::vector<int>>> parts(chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int c = 0; c < chunks; ++c) {
    std::uint64_t lo = c * step, hi = std::min(total, lo + step);
    std::vector<int> f(src.n);
    for (std::uint64_t r = lo; r < hi; ++r) {
      decode_map(r, src.n, tgt.n, f);
      if (map_is_hom(src, tgt, sig, src_tau, tgt_tau, f)) parts[c].push_back(f);
    }
  }
  std::vector<std::vector<int>> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<unary_map> frontal_scan_serial(const hilbert_algebra& h) {
  auto total = checked_pow(h.n, h.n, guards().hom_search_max);
  if (total > guards().hom_search_max)
    throw guard_error("frontal operator scan refused: " + std::to_string(h.n) + "^" +
                      std::to_string(h.n) + " candidates exceed guard");
  std::vector<unary_map> out;
  unary_map t{h.n, std::vector<int>(h.n)};
  for (std::uint64_t r = 0; r < total; ++r) {
    decode_map(r, h.n, h.n, t.map);
    if (is_frontal(h, t)) out.push_back(t);
  }
  return out;
}

std::vector<unary_map> frontal_scan_parallel(const hilbert_algebra& h) {
  auto total = checked_pow(h.n, h.n, guards().hom_search_max);
  if (total > guards().hom_search_max)
    throw guard_error("frontal operator scan refused: " + std::to_string(h.n) + "^" +
                      std::to_string(h.n) + " candidates exceed guard");
#ifdef _OPENMP
  int chunks = omp_get_max_threads() * 4;
#else
  int chunks = 1;
#endif
  std::uint64_t step = (total + chunks - 1) / chunks;
  std::vector<std::vector<unary_map>> parts(chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int c = 0; c < chunks; ++c) {
    std::uint64_t lo = c * step, hi = std::min(total, lo + step);
    unary_map t{h.n, std::vector<int>(h.n)};
    for (std::uint64_t r = lo; r < hi; ++r) {
      decode_map(r, h.n, h.n, t.map);
      if (is_frontal(h, t)) parts[c].push_back(t);
    }
  }
  std::vector<unary_map> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

namespace {

constexpr std::uint8_t kUnset = 0xFF;

// Implication tables are explored with 1 pinned at index 0, so row 0 is the
// identity, column 0 and the diagonal are constant 0.  Free cells run in
// row-major order; values ascend, hence tables are produced ascending.
struct table_search {
  int n;
  std::uint64_t node_limit;
  std::uint64_t nodes = 0;
  std::vector<std::uint8_t> t;
  std::vector<int> cells;  // flat indices of free cells
  std::vector<std::vector<std::uint8_t>>* sink;

  explicit table_search(int n_, std::uint64_t limit, std::vector<std::vector<std::uint8_t>>* out)
      : n(n_), node_limit(limit), t(n_ * n_, kUnset), sink(out) {
    for (int b = 0; b < n; ++b) t[b] = static_cast<std::uint8_t>(b);  // 1->b = b
    for (int a = 1; a < n; ++a) {
      t[a * n] = 0;      // a->1 = 1
      t[a * n + a] = 0;  // a->a = 1
    }
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b)
        if (a != b) cells.push_back(a * n + b);
  }

  std::uint8_t at(int a, int b) const { return t[a * n + b]; }

  // Sound pruning: every check below is a law of the target class, so a
  // violation on assigned cells rules out all completions.  On complete
  // tables, hilbert-1 + antisymmetry + the composition law imply hilbert-2.
  bool consistent() const {
    // antisymmetry of <=
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (at(a, b) == 0 && at(b, a) == 0) return false;
    // a <= b->a
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        auto inner = at(b, a);
        if (inner == kUnset) continue;
        auto outer = at(a, inner);
        if (outer != kUnset && outer != 0) return false;
      }
    // transitivity of <=
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b || at(a, b) != 0) continue;
        for (int c = 0; c < n; ++c) {
          if (at(b, c) == 0 && at(a, c) != kUnset && at(a, c) != 0) return false;
        }
      }
    // exchange: a->(b->c) = b->(a->c)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          auto bc = at(b, c), ac = at(a, c);
          if (bc == kUnset || ac == kUnset) continue;
          auto l = at(a, bc), r = at(b, ac);
          if (l != kUnset && r != kUnset && l != r) return false;
        }
    // composition: a->(b->c) = (a->b)->(a->c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        auto ab = at(a, b);
        if (ab == kUnset) continue;
        for (int c = 0; c < n; ++c) {
          auto bc = at(b, c), ac = at(a, c);
          if (bc == kUnset || ac == kUnset) continue;
          auto l = at(a, bc), r = at(ab, ac);
          if (l != kUnset && r != kUnset && l != r) return false;
        }
      }
    // monotonicity: a <= b implies c->a <= c->b and b->c <= a->c
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (at(a, b) != 0) continue;
        for (int c = 0; c < n; ++c) {
          auto ca = at(c, a), cb = at(c, b);
          if (ca != kUnset && cb != kUnset && at(ca, cb) != kUnset && at(ca, cb) != 0)
            return false;
          auto bc = at(b, c), ac = at(a, c);
          if (bc != kUnset && ac != kUnset && at(bc, ac) != kUnset && at(bc, ac) != 0)
            return false;
        }
      }
    return true;
  }

  void run(size_t idx) {
    if (++nodes > node_limit)
      throw guard_error("table search exceeded node guard " + std::to_string(node_limit));
    if (idx == cells.size()) {
      sink->push_back(t);
      return;
    }
    int cell = cells[idx];
    for (int v = 0; v < n; ++v) {
      t[cell] = static_cast<std::uint8_t>(v);
      if (consistent()) run(idx + 1);
    }
    t[cell] = kUnset;
  }
};

}  // namespace

std::vector<std::vector<std::uint8_t>> table_scan_serial(int n, table_search_stats* stats) {
  if (n < 1) throw precondition_error("table scan needs n >= 1");
  std::vector<std::vector<std::uint8_t>> out;
  if (n == 1) {
    out.push_back({0});
    if (stats) *stats = {1, 1};
    return out;
  }
  table_search ts(n, guards().table_search_max, &out);
  ts.run(0);
  if (stats) *stats = {ts.nodes, static_cast<std::uint64_t>(out.size())};
  return out;
}

std::vector<std::vector<std::uint8_t>> table_scan_parallel(int n, table_search_stats* stats) {
  if (n < 1) throw precondition_error("table scan needs n >= 1");
  if (n <= 2) return table_scan_serial(n, stats);

  // Branch on the first two free cells; each branch explores its subtree
  // independently and the results are concatenated in branch order.
  int branches = n * n;
  std::vector<std::vector<std::vector<std::uint8_t>>> parts(branches);
  std::vector<std::uint64_t> nodes(branches, 0);
  std::atomic<bool> guard_hit{false};
  std::uint64_t per_branch_limit = guards().table_search_max;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int br = 0; br < branches; ++br) {
    if (guard_hit.load()) continue;
    table_search ts(n, per_branch_limit, &parts[br]);
    int c0 = ts.cells[0], c1 = ts.cells[1];
    ts.t[c0] = static_cast<std::uint8_t>(br / n);
    ts.t[c1] = static_cast<std::uint8_t>(br % n);
    try {
      if (ts.consistent()) ts.run(2);
      nodes[br] = ts.nodes;
    } catch (const guard_error&) {
      guard_hit.store(true);
    }
  }
  std::uint64_t total_nodes = 0;
  for (auto k : nodes) total_nodes += k;
  if (guard_hit.load() || total_nodes > guards().table_search_max)
    throw guard_error("table search exceeded node guard " +
                      std::to_string(guards().table_search_max));
  std::vector<std::vector<std::uint8_t>> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  if (stats) *stats = {total_nodes, static_cast<std::uint64_t>(out.size())};
  return out;
}

}  // namespace frontis::kernels
