#include "frontis/extension.hpp"

#include <algorithm>

#include "frontis/error.hpp"
#include "frontis/guards.hpp"

namespace frontis {

namespace {

// k-subsets of 0..n-1 in (cardinality, lexicographic) order, applied to a
// predicate; returns the first accepted tuple.
template <typename F>
std::optional<std::vector<int>> first_combination(int n, F&& accept,
                                                  const std::vector<int>* skip = nullptr) {
  std::vector<int> idx;
  for (int k = 1; k <= n; ++k) {
    idx.assign(k, 0);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (!(skip && *skip == idx) && accept(idx)) return idx;
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

bool same_algebra(const hilbert_algebra& a, const hilbert_algebra& b) {
  return a.n == b.n && a.one == b.one && a.imp == b.imp;
}

}  // namespace

int extension::index_of(const subset& u) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == u) return static_cast<int>(i);
  return -1;
}

int extension::phi_index(int a) const {
  if (a < 0 || a >= source->n) throw range_error("phi_index argument out of range");
  return index_of(phi_images[a]);
}

extension build_extension(algebra_ptr h) {
  if (!h) throw precondition_error("build_extension needs an algebra");
  extension e;
  e.source = h;
  e.sp = spectrum(h);
  int m = e.sp.size();

  e.phi_images.reserve(h->n);
  for (int a = 0; a < h->n; ++a) e.phi_images.push_back(phi(e.sp, a));

  // close the phi images under intersection
  std::vector<subset> elems = e.phi_images;
  elems.push_back(subset::full(m));
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  for (bool grew = true; grew;) {
    grew = false;
    size_t count = elems.size();
    for (size_t i = 0; i < count; ++i)
      for (size_t j = i + 1; j < count; ++j) {
        subset meet(m, elems[i].bits & elems[j].bits);
        if (std::find(elems.begin(), elems.end(), meet) == elems.end()) {
          elems.push_back(meet);
          grew = true;
          if (elems.size() > guards().closure_max)
            throw guard_error("extension closure exceeded guard");
        }
      }
  }
  std::sort(elems.begin(), elems.end());
  e.elements = std::move(elems);

  // canonical generators: least cardinality, then lexicographic
  for (const auto& u : e.elements) {
    auto gens = first_combination(h->n, [&](const std::vector<int>& idx) {
      std::uint64_t acc = e.sp.order.full_mask();
      for (int a : idx) acc &= e.phi_images[a].bits;
      return acc == u.bits;
    });
    if (!gens) throw internal_error("extension element is not an intersection of phi images");
    e.gens.push_back(std::move(*gens));
  }

  e.one = e.index_of(subset::full(m));
  if (e.one < 0) throw internal_error("extension lost its top");
  if (h->bounded()) {
    e.zero = e.index_of(subset::empty(m));
    if (*e.zero < 0) throw internal_error("bounded source but no empty element");
    if (e.phi_images[*h->zero] != subset::empty(m))
      throw internal_error("phi(0) is not the empty upset");
  }

  // assemble the table algebra and verify closure under the implication
  int ne = static_cast<int>(e.elements.size());
  if (ne > 255) throw guard_error("extension too large for 8-bit tables");
  hilbert_algebra alg;
  alg.n = ne;
  alg.one = e.one;
  alg.zero = e.zero;
  alg.imp.assign(ne * ne, 0);
  alg.meet = std::vector<std::uint8_t>(ne * ne, 0);
  for (int i = 0; i < ne; ++i)
    for (int j = 0; j < ne; ++j) {
      auto imp = up_implication(e.sp.order, e.elements[i].bits, e.elements[j].bits);
      int k = e.index_of(subset(m, imp));
      if (k < 0) throw internal_error("implication escapes the extension closure");
      alg.imp[i * ne + j] = static_cast<std::uint8_t>(k);
      int w = e.index_of(subset(m, e.elements[i].bits & e.elements[j].bits));
      if (w < 0) throw internal_error("meet escapes the extension closure");
      (*alg.meet)[i * ne + j] = static_cast<std::uint8_t>(w);
    }
  alg.labels.reserve(ne);
  for (const auto& u : e.elements) {
    std::string l = "{";
    bool first = true;
    for (int i : u.members()) {
      if (!first) l += ",";
      first = false;
      l += "P" + std::to_string(i);
    }
    alg.labels.push_back(l + "}");
  }
  if (!h->name.empty()) alg.name = "L(" + h->name + ")";

  auto axioms =
      check_axioms(alg, h->bounded() ? algebra_class::bounded_is : algebra_class::is);
  if (!axioms.pass())
    throw internal_error("extension algebra fails its axiom suite:\n" + axioms.render(&alg));

  // phi laws: injective, implication preserving, top preserving
  for (int a = 0; a < h->n; ++a)
    for (int b = 0; b < h->n; ++b) {
      if (a != b && e.phi_images[a] == e.phi_images[b])
        throw internal_error("phi is not injective");
      auto expect = e.phi_images[h->imp_at(a, b)].bits;
      if (up_implication(e.sp.order, e.phi_images[a].bits, e.phi_images[b].bits) != expect)
        throw internal_error("phi does not preserve the implication");
    }
  if (e.phi_images[h->one] != subset::full(m)) throw internal_error("phi(1) is not the top");

  e.algebra = std::make_shared<hilbert_algebra>(std::move(alg));
  return e;
}

homomorphism lift_hom(const homomorphism& h, const extension& e1, const extension& e2) {
  if (!h.source || !same_algebra(*h.source, *e1.source))
    throw precondition_error("lift_hom: h does not start at the first extension's source");
  if (!h.target || !same_algebra(*h.target, *e2.source))
    throw precondition_error("lift_hom: h does not land in the second extension's source");
  homomorphism base = h;
  base.sig = signature{};
  if (!check_homomorphism(base)) throw precondition_error("lift_hom: h is not a homomorphism");

  int ne = static_cast<int>(e1.elements.size());
  std::vector<int> map(ne);
  for (int i = 0; i < ne; ++i) {
    auto image = [&](const std::vector<int>& gens) {
      std::uint64_t acc = e2.sp.order.full_mask();
      for (int a : gens) acc &= e2.phi_images[h.map[a]].bits;
      return acc;
    };
    std::uint64_t bits = image(e1.gens[i]);
    int k = e2.index_of(subset(e2.sp.size(), bits));
    if (k < 0) throw internal_error("lift_hom: image escapes the target extension");
    map[i] = k;

    // the image may not depend on which generating tuple is used
    auto alternative = first_combination(
        e1.source->n,
        [&](const std::vector<int>& idx) {
          std::uint64_t acc = e1.sp.order.full_mask();
          for (int a : idx) acc &= e1.phi_images[a].bits;
          return acc == e1.elements[i].bits;
        },
        &e1.gens[i]);
    if (alternative && image(*alternative) != bits)
      throw internal_error("lift_hom: image depends on the generator choice");
  }

  homomorphism out{e1.algebra, e2.algebra, std::move(map), signature{true, false, false}, {}, {}};
  if (!check_homomorphism(out))
    throw internal_error("lift_hom: lifted map is not a semilattice homomorphism");
  return out;
}

homomorphism universal_factor(const extension& e, algebra_ptr a, const homomorphism& h) {
  if (!a) throw precondition_error("universal_factor needs a target algebra");
  if (!a->has_meet() || !check_axioms(*a, algebra_class::is).pass())
    throw precondition_error("universal_factor: target is not an implicative semilattice");
  if (!h.source || !same_algebra(*h.source, *e.source))
    throw precondition_error("universal_factor: h does not start at the extension's source");
  if (!h.target || !same_algebra(*h.target, *a))
    throw precondition_error("universal_factor: h does not land in the target");
  homomorphism base = h;
  base.sig = signature{};
  if (!check_homomorphism(base)) throw precondition_error("universal_factor: h is not a homomorphism");

  int ne = static_cast<int>(e.elements.size());
  std::vector<int> map(ne);
  for (int i = 0; i < ne; ++i) {
    const auto& gens = e.gens[i];
    int acc = h.map[gens[0]];
    for (size_t k = 1; k < gens.size(); ++k) acc = a->meet_at(acc, h.map[gens[k]]);
    map[i] = acc;
  }
  homomorphism out{e.algebra, a, std::move(map), signature{true, false, false}, {}, {}};
  if (!check_homomorphism(out))
    throw internal_error("universal_factor: factorization is not a semilattice homomorphism");
  for (int x = 0; x < e.source->n; ++x)
    if (out.map[e.phi_index(x)] != h.map[x])
      throw internal_error("universal_factor: factorization does not extend h through phi");
  return out;
}

}  // namespace frontis
