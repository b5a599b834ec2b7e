#include "frontis/hom.hpp"

#include "frontis/error.hpp"
#include "frontis/guards.hpp"
#include "frontis/kernels.hpp"

namespace frontis {

namespace {

void require_structure(const homomorphism& h) {
  if (!h.source || !h.target) throw precondition_error("homomorphism lacks source or target");
  if (static_cast<int>(h.map.size()) != h.source->n)
    throw precondition_error("homomorphism map length differs from source size");
  for (int v : h.map)
    if (v < 0 || v >= h.target->n) throw range_error("homomorphism map value out of range");
  if (h.sig.meet && (!h.source->has_meet() || !h.target->has_meet()))
    throw precondition_error("signature includes meet but an algebra lacks a meet table");
  if (h.sig.zero && (!h.source->bounded() || !h.target->bounded()))
    throw precondition_error("signature includes zero but an algebra lacks a zero");
  if (h.sig.tau && (!h.source_tau || !h.target_tau))
    throw precondition_error("signature includes a frontal operator but one side is missing");
}

}  // namespace

bool check_homomorphism(const homomorphism& h) {
  require_structure(h);
  const auto& s = *h.source;
  const auto& t = *h.target;
  if (h.map[s.one] != t.one) return false;
  if (h.sig.zero && h.map[*s.zero] != *t.zero) return false;
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b) {
      if (h.map[s.imp_at(a, b)] != t.imp_at(h.map[a], h.map[b])) return false;
      if (h.sig.meet && h.map[s.meet_at(a, b)] != t.meet_at(h.map[a], h.map[b])) return false;
    }
  if (h.sig.tau)
    for (int a = 0; a < s.n; ++a)
      if (h.map[(*h.source_tau)(a)] != (*h.target_tau)(h.map[a])) return false;
  return true;
}

std::vector<homomorphism> enumerate_homomorphisms(algebra_ptr source, algebra_ptr target,
                                                  signature sig,
                                                  const std::optional<unary_map>& source_tau,
                                                  const std::optional<unary_map>& target_tau) {
  if (!source || !target) throw precondition_error("enumerate_homomorphisms needs both algebras");
  homomorphism probe{source, target, std::vector<int>(source->n, 0), sig, source_tau, target_tau};
  require_structure(probe);

  std::uint64_t work = 1;
  for (int i = 0; i < source->n && work <= guards().parallel_min_work; ++i) work *= target->n;
  auto maps = (guards().parallel && work > guards().parallel_min_work)
                  ? kernels::hom_scan_parallel(*source, *target, sig,
                                               source_tau ? &*source_tau : nullptr,
                                               target_tau ? &*target_tau : nullptr)
                  : kernels::hom_scan_serial(*source, *target, sig,
                                             source_tau ? &*source_tau : nullptr,
                                             target_tau ? &*target_tau : nullptr);
  std::vector<homomorphism> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.push_back({source, target, std::move(m), sig, source_tau, target_tau});
  return out;
}

homomorphism identity_homomorphism(algebra_ptr a, signature sig) {
  if (!a) throw precondition_error("identity_homomorphism needs an algebra");
  std::vector<int> map(a->n);
  for (int i = 0; i < a->n; ++i) map[i] = i;
  return {a, a, std::move(map), sig, {}, {}};
}

homomorphism compose(const homomorphism& outer, const homomorphism& inner) {
  if (inner.target.get() != outer.source.get())
    throw precondition_error("compose: inner target differs from outer source");
  std::vector<int> map(inner.map.size());
  for (size_t i = 0; i < inner.map.size(); ++i) map[i] = outer.map[inner.map[i]];
  return {inner.source, outer.target, std::move(map), inner.sig, inner.source_tau,
          outer.target_tau};
}

}  // namespace frontis
