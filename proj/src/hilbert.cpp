#include "frontis/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "frontis/error.hpp"
#include "frontis/guards.hpp"

namespace frontis {

algebra_class algebra_class_from_string(const std::string& s) {
  if (s == "hilbert") return algebra_class::hilbert;
  if (s == "bounded_hilbert") return algebra_class::bounded_hilbert;
  if (s == "is") return algebra_class::is;
  if (s == "bounded_is") return algebra_class::bounded_is;
  if (s == "heyting_upsets") return algebra_class::heyting_upsets;
  throw parse_error("unknown algebra class: " + s);
}

std::string to_string(algebra_class c) {
  switch (c) {
    case algebra_class::hilbert: return "hilbert";
    case algebra_class::bounded_hilbert: return "bounded_hilbert";
    case algebra_class::is: return "is";
    case algebra_class::bounded_is: return "bounded_is";
    case algebra_class::heyting_upsets: return "heyting_upsets";
  }
  return "?";
}

void hilbert_algebra::validate_shape() const {
  if (n < 1) throw range_error("algebra must have at least one element");
  if (n > 255) throw range_error("algebra too large for 8-bit tables");
  if (static_cast<int>(imp.size()) != n * n)
    throw range_error("imp table has " + std::to_string(imp.size()) + " entries, expected " +
                      std::to_string(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (imp[a * n + b] >= n)
        throw range_error("imp[" + std::to_string(a) + "][" + std::to_string(b) +
                          "] out of range");
  if (one < 0 || one >= n) throw range_error("one index out of range");
  if (zero && (*zero < 0 || *zero >= n)) throw range_error("zero index out of range");
  if (meet) {
    if (static_cast<int>(meet->size()) != n * n)
      throw range_error("meet table has " + std::to_string(meet->size()) + " entries, expected " +
                        std::to_string(n * n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if ((*meet)[a * n + b] >= n)
          throw range_error("meet[" + std::to_string(a) + "][" + std::to_string(b) +
                            "] out of range");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw range_error("label list length mismatch");
}

void report::add(std::string law, std::vector<int> witness, std::string detail) {
  violations.push_back({std::move(law), std::move(witness), std::move(detail)});
}

void report::merge(const report& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string report::render(const hilbert_algebra* alg) const {
  std::ostringstream os;
  os << subject << ": " << (pass() ? "pass" : "FAIL") << "\n";
  for (const auto& v : violations) {
    os << "  " << v.law << " at (";
    for (size_t i = 0; i < v.witness.size(); ++i) {
      if (i) os << ",";
      os << (alg ? alg->label(v.witness[i]) : std::to_string(v.witness[i]));
    }
    os << ")";
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
  }
  return os.str();
}

namespace {

void check_hilbert_laws(const hilbert_algebra& h, report& r) {
  int n = h.n, one = h.one;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (h.imp_at(a, h.imp_at(b, a)) != one) r.add("hilbert-1", {a, b});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int lhs = h.imp_at(a, h.imp_at(b, c));
        int rhs = h.imp_at(h.imp_at(a, b), h.imp_at(a, c));
        if (h.imp_at(lhs, rhs) != one) r.add("hilbert-2", {a, b, c});
      }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (h.imp_at(a, b) == one && h.imp_at(b, a) == one) r.add("hilbert-3", {a, b});
}

void check_bound(const hilbert_algebra& h, report& r) {
  if (!h.zero) {
    r.add("bounded", {}, "no zero declared");
    return;
  }
  for (int a = 0; a < h.n; ++a)
    if (h.imp_at(*h.zero, a) != h.one) r.add("bounded", {a}, "0->a differs from 1");
}

void check_semilattice(const hilbert_algebra& h, report& r) {
  if (!h.meet) {
    r.add("semilattice", {}, "no meet declared");
    return;
  }
  int n = h.n, one = h.one;
  for (int a = 0; a < n; ++a) {
    if (h.meet_at(a, a) != a) r.add("meet-idempotent", {a});
    for (int b = 0; b < n; ++b) {
      if (h.meet_at(a, b) != h.meet_at(b, a)) r.add("meet-commutative", {a, b});
      for (int c = 0; c < n; ++c)
        if (h.meet_at(h.meet_at(a, b), c) != h.meet_at(a, h.meet_at(b, c)))
          r.add("meet-associative", {a, b, c});
    }
  }
  // the meet order and the implication order must be the same relation
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool meet_leq = h.meet_at(a, b) == a;
      bool imp_leq = h.imp_at(a, b) == one;
      if (meet_leq != imp_leq) r.add("order-agreement", {a, b});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        bool left = h.imp_at(h.meet_at(a, b), c) == one;   // a&b <= c
        bool right = h.imp_at(a, h.imp_at(b, c)) == one;   // a <= b->c
        if (left != right) r.add("residuation", {a, b, c});
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (h.imp_at(h.meet_at(a, b), c) != h.imp_at(a, h.imp_at(b, c)))
          r.add("curry", {a, b, c});
        if (h.imp_at(a, h.meet_at(b, c)) != h.meet_at(h.imp_at(a, b), h.imp_at(a, c)))
          r.add("meet-distribution", {a, b, c});
      }
}

void check_heyting(const hilbert_algebra& h, report& r) {
  if (!h.meet) return;  // reported by the semilattice suite
  finite_poset p;
  try {
    p = natural_order(h);
  } catch (const validation_error&) {
    return;  // already reported through the hilbert laws
  }
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b) {
      auto j = p.join(a, b);
      if (!j) {
        r.add("join-exists", {a, b});
        continue;
      }
      for (int c = 0; c < h.n; ++c) {
        auto jl = p.join(h.meet_at(c, a), h.meet_at(c, b));
        if (!jl || *jl != h.meet_at(c, *j)) r.add("distributive", {c, a, b});
      }
    }
}

}  // namespace

report check_axioms(const hilbert_algebra& h, algebra_class cls) {
  h.validate_shape();
  report r;
  r.subject = "check " + to_string(cls);
  check_hilbert_laws(h, r);
  switch (cls) {
    case algebra_class::hilbert:
      break;
    case algebra_class::bounded_hilbert:
      check_bound(h, r);
      break;
    case algebra_class::is:
      check_semilattice(h, r);
      break;
    case algebra_class::bounded_is:
      check_semilattice(h, r);
      check_bound(h, r);
      break;
    case algebra_class::heyting_upsets:
      check_semilattice(h, r);
      check_bound(h, r);
      check_heyting(h, r);
      break;
  }
  return r;
}

finite_poset natural_order(const hilbert_algebra& h) {
  h.validate_shape();
  int n = h.n;
  std::vector<std::uint64_t> up(n, 0);
  if (n > 64) throw guard_error("natural order needs at most 64 elements");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (h.leq(a, b)) up[a] |= 1ull << b;
  auto p = finite_poset::from_up_rows(n, std::move(up));  // throws with location
  if (!p.maximum() || *p.maximum() != h.one)
    throw validation_error("1 is not the top of the natural order");
  return p;
}

hilbert_algebra upset_algebra(const finite_poset& p) {
  auto ups = all_upsets(p);
  int n = static_cast<int>(ups.size());
  if (n > 255) throw guard_error("upset algebra too large");
  auto index_of = [&](std::uint64_t m) {
    return static_cast<int>(std::find(ups.begin(), ups.end(), m) - ups.begin());
  };
  hilbert_algebra h;
  h.n = n;
  h.imp.assign(n * n, 0);
  h.meet = std::vector<std::uint8_t>(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      h.imp[i * n + j] = static_cast<std::uint8_t>(index_of(up_implication(p, ups[i], ups[j])));
      (*h.meet)[i * n + j] = static_cast<std::uint8_t>(index_of(ups[i] & ups[j]));
    }
  h.one = index_of(p.full_mask());
  h.zero = index_of(0);
  h.labels.reserve(n);
  for (auto m : ups) h.labels.push_back(to_string(subset(p.size(), m)));
  return h;
}

std::optional<std::vector<std::uint8_t>> join_table(const hilbert_algebra& h) {
  auto p = natural_order(h);
  std::vector<std::uint8_t> t(h.n * h.n);
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b) {
      auto j = p.join(a, b);
      if (!j) return std::nullopt;
      t[a * h.n + b] = static_cast<std::uint8_t>(*j);
    }
  return t;
}

std::optional<std::vector<std::uint8_t>> glb_meet_table(const hilbert_algebra& h) {
  auto p = natural_order(h);
  std::vector<std::uint8_t> t(h.n * h.n);
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b) {
      auto m = p.meet(a, b);
      if (!m) return std::nullopt;
      t[a * h.n + b] = static_cast<std::uint8_t>(*m);
    }
  return t;
}

}  // namespace frontis
