#include "frontis/filters.hpp"

#include <algorithm>

#include "frontis/error.hpp"
#include "frontis/guards.hpp"
#include "frontis/kernels.hpp"

namespace frontis {

namespace {

void require_carrier_subset(const hilbert_algebra& h, const subset& s, const char* what) {
  if (s.universe != h.n)
    throw precondition_error(std::string(what) + " universe differs from carrier size");
}

}  // namespace

bool is_implicative_filter(const hilbert_algebra& h, const subset& s) {
  require_carrier_subset(h, s, "filter candidate");
  if (!s.contains(h.one)) return false;
  for (int a = 0; a < h.n; ++a) {
    if (!s.contains(a)) continue;
    for (int b = 0; b < h.n; ++b)
      if (!s.contains(b) && s.contains(h.imp_at(a, b))) return false;
  }
  return true;
}

bool is_order_ideal(const hilbert_algebra& h, const subset& s) {
  require_carrier_subset(h, s, "ideal candidate");
  if (s.empty_set()) return false;
  for (int a = 0; a < h.n; ++a) {
    if (!s.contains(a)) continue;
    for (int b = 0; b < h.n; ++b)
      if (h.leq(b, a) && !s.contains(b)) return false;  // downward closed
  }
  for (int a = 0; a < h.n; ++a) {
    if (!s.contains(a)) continue;
    for (int b = 0; b < h.n; ++b) {
      if (!s.contains(b)) continue;
      bool bounded_inside = false;
      for (int c = 0; c < h.n && !bounded_inside; ++c)
        if (s.contains(c) && h.leq(a, c) && h.leq(b, c)) bounded_inside = true;
      if (!bounded_inside) return false;  // up-directed
    }
  }
  return true;
}

subset generate_filter(const hilbert_algebra& h, const subset& x) {
  require_carrier_subset(h, x, "generator set");
  subset s = x;
  s.add(h.one);
  for (bool grew = true; grew;) {
    grew = false;
    for (int a = 0; a < h.n; ++a) {
      if (!s.contains(a)) continue;
      for (int b = 0; b < h.n; ++b)
        if (!s.contains(b) && s.contains(h.imp_at(a, b))) {
          s.add(b);
          grew = true;
        }
    }
  }
  return s;
}

subset generate_filter_by_words(const hilbert_algebra& h, const subset& x) {
  require_carrier_subset(h, x, "generator set");
  subset out = subset::empty(h.n);
  for (int b = 0; b < h.n; ++b) {
    // values of a1->(a2->...(ak->b)...) over all words from x, grown to a fixpoint
    std::uint64_t reach = 1ull << b;
    for (bool grew = true; grew;) {
      grew = false;
      for (int v = 0; v < h.n; ++v) {
        if (!((reach >> v) & 1u)) continue;
        for (int a = 0; a < h.n; ++a) {
          if (!x.contains(a)) continue;
          int w = h.imp_at(a, v);
          if (!((reach >> w) & 1u)) {
            reach |= 1ull << w;
            grew = true;
          }
        }
      }
    }
    if (b == h.one || ((reach >> h.one) & 1u)) out.add(b);
  }
  return out;
}

std::vector<subset> all_filters(const hilbert_algebra& h) {
  auto masks = (guards().parallel && (1ull << h.n) > guards().parallel_min_work)
                   ? kernels::filter_scan_parallel(h)
                   : kernels::filter_scan_serial(h);
  std::vector<subset> out;
  out.reserve(masks.size());
  for (auto m : masks) out.emplace_back(h.n, m);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_irreducible(const hilbert_algebra& h, const subset& f) {
  if (!is_implicative_filter(h, f)) throw precondition_error("is_irreducible: not a filter");
  if (f == subset::full(h.n)) return false;  // improper
  auto filters = all_filters(h);
  for (size_t i = 0; i < filters.size(); ++i) {
    if (!(f.bits != filters[i].bits && f.subset_of(filters[i]))) continue;
    for (size_t j = i; j < filters.size(); ++j) {
      if (!(f.bits != filters[j].bits && f.subset_of(filters[j]))) continue;
      if ((filters[i].bits & filters[j].bits) == f.bits) return false;
    }
  }
  return true;
}

bool sc_criterion(const hilbert_algebra& h, const subset& f) {
  if (!is_implicative_filter(h, f)) throw precondition_error("sc_criterion: not a filter");
  if (f == subset::full(h.n)) return false;
  for (int a = 0; a < h.n; ++a) {
    if (f.contains(a)) continue;
    for (int b = 0; b < h.n; ++b) {
      if (f.contains(b)) continue;
      bool found = false;
      for (int c = 0; c < h.n && !found; ++c)
        if (!f.contains(c) && h.leq(a, c) && h.leq(b, c)) found = true;
      if (!found) return false;
    }
  }
  return true;
}

spectrum_poset spectrum(algebra_ptr h) {
  if (!h) throw precondition_error("spectrum needs an algebra");
  spectrum_poset sp;
  sp.source = h;
  for (const auto& f : all_filters(*h))
    if (is_irreducible(*h, f)) sp.points.push_back(f);
  int m = static_cast<int>(sp.points.size());
  if (m > guards().spectrum_max)
    throw guard_error("spectrum has " + std::to_string(m) + " points, guard is " +
                      std::to_string(guards().spectrum_max));
  std::vector<std::uint64_t> up(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (sp.points[i].subset_of(sp.points[j])) up[i] |= 1ull << j;
  sp.order = finite_poset::from_up_rows(m, std::move(up));
  return sp;
}

subset phi(const spectrum_poset& sp, int a) {
  if (a < 0 || a >= sp.source->n) throw range_error("phi argument out of range");
  subset u = subset::empty(sp.size());
  for (int i = 0; i < sp.size(); ++i)
    if (sp.points[i].contains(a)) u.add(i);
  return u;
}

subset separate(const hilbert_algebra& h, const subset& f, const subset& i) {
  if (!is_implicative_filter(h, f)) throw precondition_error("separate: F is not a filter");
  if (!is_order_ideal(h, i)) throw precondition_error("separate: I is not an order-ideal");
  if ((f.bits & i.bits) != 0) throw precondition_error("separate: F and I intersect");
  auto sp = spectrum(std::make_shared<hilbert_algebra>(h));
  for (const auto& p : sp.points)
    if (f.subset_of(p) && (p.bits & i.bits) == 0) return p;
  throw internal_error("separation failed although F and I are disjoint");
}

subset witness_omitting(const hilbert_algebra& h, const subset& f, int a) {
  if (!is_implicative_filter(h, f)) throw precondition_error("witness_omitting: not a filter");
  if (a < 0 || a >= h.n) throw range_error("witness_omitting: element out of range");
  if (f.contains(a)) throw precondition_error("witness_omitting: element already in the filter");
  auto sp = spectrum(std::make_shared<hilbert_algebra>(h));
  for (const auto& p : sp.points)
    if (f.subset_of(p) && !p.contains(a)) return p;
  throw internal_error("no spectrum point extends the filter and omits the element");
}

}  // namespace frontis
