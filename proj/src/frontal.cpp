#include "frontis/frontal.hpp"

#include <algorithm>

#include "frontis/error.hpp"
#include "frontis/guards.hpp"
#include "frontis/kernels.hpp"

namespace frontis {

namespace {

void require_unary(const hilbert_algebra& h, const unary_map& t) {
  if (t.n != h.n || static_cast<int>(t.map.size()) != h.n)
    throw precondition_error("unary map size differs from carrier");
  for (int v : t.map)
    if (v < 0 || v >= h.n) throw range_error("unary map value out of range");
}

int neg(const hilbert_algebra& h, int a) { return h.imp_at(a, *h.zero); }

}  // namespace

bool is_frontal(const hilbert_algebra& h, const unary_map& t) {
  int n = h.n, one = h.one;
  for (int a = 0; a < n; ++a)
    if (h.imp_at(a, t(a)) != one) return false;  // i2
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (h.imp_at(t(h.imp_at(a, b)), h.imp_at(t(a), t(b))) != one) return false;  // i1
      int d = h.imp_at(h.imp_at(h.imp_at(b, a), b), b);
      if (h.imp_at(t(a), d) != one) return false;  // i3
    }
  return true;
}

report check_frontal(const hilbert_algebra& h, const unary_map& t, frontal_flavor flavor) {
  require_unary(h, t);
  report r;
  r.subject = "frontal";
  int n = h.n, one = h.one;

  if (flavor != frontal_flavor::hilbert && !h.has_meet())
    throw precondition_error("this frontal flavor needs a meet table");

  for (int a = 0; a < n; ++a)
    if (h.imp_at(a, t(a)) != one) r.add("i2", {a});

  if (flavor == frontal_flavor::hilbert) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (h.imp_at(t(h.imp_at(a, b)), h.imp_at(t(a), t(b))) != one) r.add("i1", {a, b});
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (t(h.meet_at(a, b)) != h.meet_at(t(a), t(b)))
          r.add(flavor == frontal_flavor::heyting ? "f1" : "meet-distribution", {a, b});
  }

  if (flavor == frontal_flavor::heyting) {
    auto joins = join_table(h);
    if (!joins) throw precondition_error("heyting frontal flavor needs all joins");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int bound = (*joins)[b * n + h.imp_at(b, a)];  // b v (b->a)
        if (h.imp_at(t(a), bound) != one) r.add("f3", {a, b});
      }
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int d = h.imp_at(h.imp_at(h.imp_at(b, a), b), b);
        if (h.imp_at(t(a), d) != one) r.add("i3", {a, b});
      }
  }
  return r;
}

report check_gamma(const hilbert_algebra& h, const unary_map& t) {
  if (!h.bounded()) throw precondition_error("gamma laws need a bottom element");
  auto r = check_frontal(h, t, frontal_flavor::hilbert);
  r.subject = "gamma";
  int n = h.n, one = h.one;
  for (int a = 0; a < n; ++a)
    if (h.imp_at(neg(h, t(a)), t(a)) != one) r.add("g4", {a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int rhs = h.imp_at(h.imp_at(a, b), h.imp_at(h.imp_at(neg(h, b), b), b));
      if (h.imp_at(t(a), rhs) != one) r.add("g5", {a, b});
    }
  return r;
}

report check_successor(const hilbert_algebra& h, const unary_map& t) {
  require_unary(h, t);
  report r;
  r.subject = "successor";
  int n = h.n, one = h.one;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int d = h.imp_at(h.imp_at(h.imp_at(b, a), b), b);
      if (h.imp_at(t(a), d) != one) r.add("s1", {a, b});
    }
  for (int a = 0; a < n; ++a)
    if (h.imp_at(h.imp_at(t(a), a), t(a)) != one) r.add("s2", {a});
  return r;
}

report check_gabbay(const hilbert_algebra& h, const unary_map& t) {
  if (!h.bounded()) throw precondition_error("gabbay laws need a bottom element");
  require_unary(h, t);
  report r;
  r.subject = "gabbay";
  int n = h.n, one = h.one;
  for (int a = 0; a < n; ++a)
    if (h.imp_at(a, t(a)) != one) r.add("i2", {a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int d = h.imp_at(h.imp_at(h.imp_at(b, a), b), b);
      if (h.imp_at(t(a), d) != one) r.add("i3", {a, b});
    }
  for (int a = 0; a < n; ++a)
    if (h.imp_at(t(a), neg(h, neg(h, a))) != one) r.add("g4-gabbay", {a});
  for (int a = 0; a < n; ++a)
    if (h.imp_at(h.imp_at(t(a), a), h.imp_at(neg(h, neg(h, a)), a)) != one)
      r.add("g5-gabbay", {a});
  return r;
}

std::vector<unary_map> enumerate_frontal_operators(const hilbert_algebra& h) {
  std::uint64_t work = 1;
  bool big = false;
  for (int i = 0; i < h.n; ++i) {
    work *= h.n;
    if (work > guards().parallel_min_work) {
      big = true;
      break;
    }
  }
  return (guards().parallel && big) ? kernels::frontal_scan_parallel(h)
                                    : kernels::frontal_scan_serial(h);
}

subset coderivative(const finite_poset& p, const subset& u) {
  if (u.universe != p.size()) throw precondition_error("coderivative: universe mismatch");
  if (!p.is_upset(u.bits)) throw precondition_error("coderivative: not an upset");
  return subset(p.size(), u.bits | p.maximal_in(~u.bits & p.full_mask()));
}

subset tau_pi(const extension& e, const unary_map& t, const subset& u) {
  require_unary(*e.source, t);
  if (u.universe != e.sp.size()) throw precondition_error("tau_pi: universe mismatch");
  if (!e.sp.order.is_upset(u.bits)) throw precondition_error("tau_pi: not an upset");
  int m = e.sp.size();
  subset out = subset::empty(m);
  for (int p = 0; p < m; ++p) {
    std::uint64_t pullback = 0;  // elements a with t(a) in the p-th filter
    for (int a = 0; a < e.source->n; ++a)
      if (e.sp.points[p].contains(t(a))) pullback |= 1ull << a;
    bool all_in = true;
    for (int q = 0; q < m && all_in; ++q)
      if ((pullback & ~e.sp.points[q].bits) == 0 && !u.contains(q)) all_in = false;
    if (all_in) out.add(p);
  }
  return out;
}

unary_map extend_frontal(const extension& e, const unary_map& t) {
  require_unary(*e.source, t);
  if (!is_frontal(*e.source, t))
    throw precondition_error("extend_frontal: the operator is not frontal");
  int m = static_cast<int>(e.elements.size());
  unary_map out{m, std::vector<int>(m)};
  for (int i = 0; i < m; ++i) {
    subset img = subset::full(e.sp.size());
    for (int a : e.gens[i]) img.bits &= e.phi_images[t(a)].bits;
    auto direct = tau_pi(e, t, e.elements[i]);
    if (img != direct)
      throw internal_error("extend_frontal: generator formula disagrees with tau_pi at element " +
                           std::to_string(i));
    int k = e.index_of(img);
    if (k < 0) throw internal_error("extend_frontal: image escapes the extension");
    out.map[i] = k;
  }
  auto check = check_frontal(*e.algebra, out, frontal_flavor::semilattice);
  if (!check.pass())
    throw internal_error("extend_frontal: extended operator fails the semilattice frontal laws");
  return out;
}

namespace {

min_op_result min_of_candidates(const hilbert_algebra& h,
                                const std::vector<std::vector<int>>& candidates) {
  min_op_result res;
  unary_map out{h.n, std::vector<int>(h.n)};
  for (int a = 0; a < h.n; ++a) {
    const auto& set = candidates[a];
    int best = -1;
    for (int m : set) {
      bool below_all = true;
      for (int x : set)
        if (!h.leq(m, x)) {
          below_all = false;
          break;
        }
      if (below_all) {
        best = m;
        break;
      }
    }
    if (best >= 0) {
      out.map[a] = best;
    } else {
      min_op_result::miss miss{a, {}};
      for (int m : set) {
        bool minimal = true;
        for (int x : set)
          if (x != m && h.leq(x, m)) {
            minimal = false;
            break;
          }
        if (minimal) miss.minimal.push_back(m);
      }
      res.misses.push_back(std::move(miss));
    }
  }
  if (res.misses.empty()) res.map = std::move(out);
  return res;
}

}  // namespace

min_op_result find_gamma(const hilbert_algebra& h) {
  if (!h.bounded()) throw precondition_error("find_gamma needs a bottom element");
  std::vector<std::vector<int>> cand(h.n);
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b)
      if (h.leq(neg(h, b), b) && h.leq(a, b)) cand[a].push_back(b);
  auto res = min_of_candidates(h, cand);
  if (res.map && !check_gamma(h, *res.map).pass())
    throw internal_error("find_gamma: pointwise minima fail the gamma laws");
  return res;
}

min_op_result find_successor(const hilbert_algebra& h) {
  h.validate_shape();
  std::vector<std::vector<int>> cand(h.n);
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b)
      if (h.leq(h.imp_at(b, a), b)) cand[a].push_back(b);
  auto res = min_of_candidates(h, cand);
  if (res.map && !check_successor(h, *res.map).pass())
    throw internal_error("find_successor: pointwise minima fail the successor laws");
  return res;
}

min_op_result find_gabbay(const hilbert_algebra& h) {
  if (!h.bounded()) throw precondition_error("find_gabbay needs a bottom element");
  std::vector<std::vector<int>> cand(h.n);
  for (int a = 0; a < h.n; ++a) {
    int nna = neg(h, neg(h, a));
    for (int b = 0; b < h.n; ++b)
      if (h.leq(h.imp_at(b, a), h.imp_at(nna, b))) cand[a].push_back(b);
  }
  auto res = min_of_candidates(h, cand);
  if (res.map && !check_gabbay(h, *res.map).pass())
    throw internal_error("find_gabbay: pointwise minima fail the gabbay laws");
  return res;
}

subset poset_successor(const finite_poset& p, const subset& u) { return coderivative(p, u); }

std::optional<subset> poset_successor_by_scan(const finite_poset& p, const subset& u) {
  if (u.universe != p.size()) throw precondition_error("poset_successor_by_scan: universe mismatch");
  if (!p.is_upset(u.bits)) throw precondition_error("poset_successor_by_scan: not an upset");
  std::vector<std::uint64_t> candidates;
  for (auto v : all_upsets(p))
    if ((up_implication(p, v, u.bits) & ~v) == 0) candidates.push_back(v);
  for (auto v : candidates) {
    bool least = true;
    for (auto w : candidates)
      if ((v & ~w) != 0) {
        least = false;
        break;
      }
    if (least) return subset(p.size(), v);
  }
  return std::nullopt;
}

namespace {

void require_upset(const extension& e, const subset& u, const char* what) {
  if (u.universe != e.sp.size()) throw precondition_error(std::string(what) + ": universe mismatch");
  if (!e.sp.order.is_upset(u.bits)) throw precondition_error(std::string(what) + ": not an upset");
}

}  // namespace

subset gamma_pi(const extension& e, const unary_map& op, const subset& u) {
  require_upset(e, u, "gamma_pi");
  if (!check_gamma(*e.source, op).pass())
    throw precondition_error("gamma_pi: operator fails the gamma laws");
  auto& ord = e.sp.order;
  return subset(e.sp.size(), u.bits | ord.maximal_in(ord.full_mask()));
}

subset s_pi(const extension& e, const unary_map& op, const subset& u) {
  require_upset(e, u, "s_pi");
  if (!check_successor(*e.source, op).pass())
    throw precondition_error("s_pi: operator fails the successor laws");
  return coderivative(e.sp.order, u);
}

subset g_pi(const extension& e, const unary_map& op, const subset& u) {
  require_upset(e, u, "g_pi");
  if (!check_gabbay(*e.source, op).pass())
    throw precondition_error("g_pi: operator fails the gabbay laws");
  auto& ord = e.sp.order;
  std::uint64_t nn = up_implication(ord, up_implication(ord, u.bits, 0), 0);
  std::uint64_t max_c = ord.maximal_in(~u.bits & ord.full_mask());
  return subset(e.sp.size(), u.bits | (nn & max_c));
}

}  // namespace frontis
