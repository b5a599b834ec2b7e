#include "frontis/props.hpp"

#include <algorithm>
#include <random>

#include "frontis/error.hpp"
#include "frontis/guards.hpp"

namespace frontis::props {

namespace {

std::vector<subset> all_subsets(int n) {
  std::vector<subset> out;
  out.reserve(1ull << n);
  for (std::uint64_t m = 0; m < (1ull << n); ++m) out.emplace_back(n, m);
  return out;
}

}  // namespace

std::vector<subset> upsets_for_checks(const finite_poset& p) {
  std::vector<subset> out;
  if (p.size() <= guards().upset_exhaustive_max) {
    for (auto m : all_upsets(p)) out.emplace_back(p.size(), m);
    return out;
  }
  std::mt19937_64 rng(guards().sample_seed);
  for (std::uint64_t i = 0; i < guards().sample_count; ++i) {
    std::uint64_t m = rng() & p.full_mask();
    out.emplace_back(p.size(), p.up_closure(m));
  }
  return out;
}

report basic_laws(const hilbert_algebra& h) {
  report r;
  r.subject = "basic laws";
  int n = h.n, one = h.one;
  for (int a = 0; a < n; ++a) {
    if (h.imp_at(a, a) != one) r.add("a->a=1", {a});
    if (h.imp_at(one, a) != a) r.add("1->a=a", {a});
    if (h.imp_at(a, one) != one) r.add("a->1=1", {a});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (h.imp_at(a, h.imp_at(b, a)) != one) r.add("a<=b->a", {a, b});
      if (h.imp_at(a, h.imp_at(h.imp_at(a, b), b)) != one) r.add("a<=(a->b)->b", {a, b});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (h.imp_at(a, h.imp_at(b, c)) != h.imp_at(b, h.imp_at(a, c)))
          r.add("exchange", {a, b, c});
        if (h.imp_at(a, h.imp_at(b, c)) != h.imp_at(h.imp_at(a, b), h.imp_at(a, c)))
          r.add("composition", {a, b, c});
        if (h.leq(a, b)) {
          if (!h.leq(h.imp_at(c, a), h.imp_at(c, b))) r.add("monotone-right", {a, b, c});
          if (!h.leq(h.imp_at(b, c), h.imp_at(a, c))) r.add("monotone-left", {a, b, c});
        }
      }
  return r;
}

report filter_oracles(algebra_ptr h) {
  report r;
  r.subject = "filter generation routes";
  auto filters = all_filters(*h);
  if (!std::is_sorted(filters.begin(), filters.end()))
    r.add("filter-order", {}, "all_filters is not sorted by (cardinality, bits)");
  if (std::find(filters.begin(), filters.end(), subset::full(h->n)) == filters.end())
    r.add("improper-filter", {}, "carrier itself missing from all_filters");
  for (const auto& f : filters)
    if (!is_implicative_filter(*h, f)) r.add("filter-scan", {}, "scan produced a non-filter");

  for (const auto& x : all_subsets(h->n)) {
    auto closure = generate_filter(*h, x);
    auto words = generate_filter_by_words(*h, x);
    subset least = subset::full(h->n);
    for (const auto& f : filters)
      if (x.subset_of(f)) least.bits &= f.bits;
    if (closure != words)
      r.add("closure-vs-words", x.members(), "generation routes disagree");
    if (closure != least)
      r.add("closure-vs-least", x.members(), "closure is not the least covering filter");
    if (!is_implicative_filter(*h, closure))
      r.add("closure-filter", x.members(), "closure is not a filter");
  }
  return r;
}

report filter_lattice_distributive(algebra_ptr h) {
  report r;
  r.subject = "filter lattice distributivity";
  auto filters = all_filters(*h);
  auto join = [&](const subset& a, const subset& b) {
    return generate_filter(*h, subset(h->n, a.bits | b.bits));
  };
  for (size_t i = 0; i < filters.size(); ++i)
    for (size_t j = 0; j < filters.size(); ++j)
      for (size_t k = 0; k < filters.size(); ++k) {
        auto lhs = subset(h->n, filters[i].bits & join(filters[j], filters[k]).bits);
        auto rhs = join(subset(h->n, filters[i].bits & filters[j].bits),
                        subset(h->n, filters[i].bits & filters[k].bits));
        if (lhs != rhs)
          r.add("distributivity", {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)},
                "F&(G|K) differs from (F&G)|(F&K)");
      }
  return r;
}

report irreducibility_criterion(algebra_ptr h) {
  report r;
  r.subject = "irreducibility criterion";
  for (const auto& f : all_filters(*h)) {
    bool lattice = is_irreducible(*h, f);
    bool criterion = sc_criterion(*h, f);
    if (f == subset::full(h->n)) {
      if (lattice) r.add("improper-irreducible", {}, "the improper filter counted as irreducible");
      continue;
    }
    if (lattice != criterion)
      r.add("criterion-mismatch", f.members(),
            lattice ? "irreducible but fails the upper-bound criterion"
                    : "criterion holds but the filter is reducible");
  }
  return r;
}

report separation_laws(algebra_ptr h) {
  report r;
  r.subject = "separation";
  auto sp = spectrum(h);
  auto filters = all_filters(*h);

  for (const auto& f : filters)
    for (int a = 0; a < h->n; ++a) {
      if (f.contains(a)) continue;
      auto p = witness_omitting(*h, f, a);  // throws internal_error when missing
      if (!f.subset_of(p) || p.contains(a)) r.add("extension-witness", {a});
    }

  for (int a = 0; a < h->n; ++a)
    for (int b = 0; b < h->n; ++b) {
      if (h->leq(a, b)) continue;
      bool found = false;
      for (const auto& p : sp.points)
        if (p.contains(a) && !p.contains(b)) found = true;
      if (!found) r.add("order-separation", {a, b});
    }

  for (const auto& f : filters)
    for (int a = 0; a < h->n; ++a)
      for (int b = 0; b < h->n; ++b) {
        bool outside = !f.contains(h->imp_at(a, b));
        bool witnessed = false;
        for (const auto& p : sp.points)
          if (f.subset_of(p) && p.contains(a) && !p.contains(b)) witnessed = true;
        if (outside != witnessed) r.add("imp-outside-filter", {a, b});
      }

  // separate returns the first fitting spectrum point in index order
  for (const auto& f : filters) {
    for (const auto& i : all_subsets(h->n)) {
      if (!is_order_ideal(*h, i) || (f.bits & i.bits) != 0) continue;
      auto got = separate(*h, f, i);
      subset expect = subset::empty(h->n);
      for (const auto& p : sp.points)
        if (f.subset_of(p) && (p.bits & i.bits) == 0) {
          expect = p;
          break;
        }
      if (got != expect) r.add("first-witness", f.members(), "separate returned a later point");
    }
  }
  return r;
}

report implication_compatible_pullback(algebra_ptr src, algebra_ptr tgt) {
  report r;
  r.subject = "pullback of filters";
  auto filters = all_filters(*tgt);
  std::uint64_t total = 1;
  for (int i = 0; i < src->n; ++i) {
    total *= tgt->n;
    if (total > guards().hom_search_max) throw guard_error("pullback scan too large");
  }
  std::vector<int> f(src->n);
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    auto rest = rank;
    for (int i = src->n - 1; i >= 0; --i) {
      f[i] = static_cast<int>(rest % tgt->n);
      rest /= tgt->n;
    }
    if (f[src->one] != tgt->one) continue;
    bool compatible = true;
    for (int a = 0; a < src->n && compatible; ++a)
      for (int b = 0; b < src->n && compatible; ++b)
        if (!tgt->leq(f[src->imp_at(a, b)], tgt->imp_at(f[a], f[b]))) compatible = false;
    if (!compatible) continue;
    for (const auto& g : filters) {
      subset pull = subset::empty(src->n);
      for (int a = 0; a < src->n; ++a)
        if (g.contains(f[a])) pull.add(a);
      if (!is_implicative_filter(*src, pull))
        r.add("pullback-not-filter", f, "preimage of " + to_string(g));
    }
  }
  return r;
}

report phi_laws(algebra_ptr h) {
  report r;
  r.subject = "phi laws";
  auto sp = spectrum(h);
  std::vector<subset> ph;
  for (int a = 0; a < h->n; ++a) ph.push_back(phi(sp, a));

  for (int a = 0; a < h->n; ++a)
    if (!sp.order.is_upset(ph[a].bits)) r.add("phi-upset", {a});
  for (int a = 0; a < h->n; ++a)
    for (int b = 0; b < h->n; ++b) {
      if (a != b && ph[a] == ph[b]) r.add("phi-injective", {a, b});
      if (up_implication(sp.order, ph[a].bits, ph[b].bits) != ph[h->imp_at(a, b)].bits)
        r.add("phi-implication", {a, b});
      bool incl = ph[a].subset_of(ph[b]);
      if (incl != h->leq(a, b)) r.add("phi-order-embedding", {a, b});
    }
  if (ph[h->one] != subset::full(sp.size())) r.add("phi-top", {h->one});
  if (h->bounded() && ph[*h->zero] != subset::empty(sp.size())) r.add("phi-bottom", {*h->zero});

  // n-ary residuation: intersection of phi(ai) => phi(b) is phi of the chain
  for (const auto& s : all_subsets(h->n)) {
    if (s.empty_set()) continue;
    auto mem = s.members();
    std::uint64_t acc = sp.order.full_mask();
    for (int a : mem) acc &= ph[a].bits;
    for (int b = 0; b < h->n; ++b) {
      int chain = b;
      for (auto it = mem.rbegin(); it != mem.rend(); ++it) chain = h->imp_at(*it, chain);
      if (up_implication(sp.order, acc, ph[b].bits) != ph[chain].bits)
        r.add("n-ary-residuation", mem, "b=" + h->label(b));
    }
  }
  return r;
}

report up_implication_routes(const finite_poset& p) {
  report r;
  r.subject = "upset implication routes";
  auto ups = upsets_for_checks(p);
  for (const auto& u : ups)
    for (const auto& v : ups) {
      auto a = up_implication(p, u.bits, v.bits);
      auto b = up_implication_pointwise(p, u.bits, v.bits);
      if (a != b) r.add("route-mismatch", {}, to_string(u) + " => " + to_string(v));
      if (!p.is_upset(a)) r.add("not-upset", {}, to_string(u) + " => " + to_string(v));
    }
  if (p.size() <= 10)  // residuation needs the full cube
    for (const auto& u : ups)
      for (const auto& v : ups)
        for (const auto& w : ups) {
          bool left = (w.bits & u.bits & ~v.bits) == 0;
          bool right = (w.bits & ~up_implication(p, u.bits, v.bits)) == 0;
          if (left != right)
            r.add("upset-residuation", {},
                  to_string(w) + " & " + to_string(u) + " <= " + to_string(v));
        }
  return r;
}

report extension_invariants(algebra_ptr h) {
  report r;
  r.subject = "extension invariants";
  auto e = build_extension(h);  // throws internal_error on any broken invariant

  for (size_t i = 0; i + 1 < e.elements.size(); ++i)
    if (!(e.elements[i] < e.elements[i + 1])) r.add("element-order", {static_cast<int>(i)});

  for (size_t i = 0; i < e.elements.size(); ++i) {
    std::uint64_t acc = e.sp.order.full_mask();
    for (int a : e.gens[i]) acc &= e.phi_images[a].bits;
    if (acc != e.elements[i].bits) r.add("gens-reproduce", {static_cast<int>(i)});
  }

  if (h->has_meet() && check_axioms(*h, algebra_class::is).pass()) {
    if (static_cast<int>(e.elements.size()) != h->n)
      r.add("semilattice-size", {}, "extension of a semilattice changed size");
    auto id = identity_homomorphism(h, signature{});
    auto f = universal_factor(e, h, id);
    std::vector<bool> seen(h->n, false);
    for (int v : f.map) seen[v] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
      r.add("semilattice-iso", {}, "factor of the identity is not onto");
  }
  return r;
}

report universal_property(const extension& e, algebra_ptr a) {
  report r;
  r.subject = "universal property";
  auto homs = enumerate_homomorphisms(e.source, a, signature{});
  auto all = enumerate_homomorphisms(e.algebra, a, signature{true, false, false});
  for (const auto& h0 : homs) {
    auto f = universal_factor(e, a, h0);
    int matches = 0;
    bool f_seen = false;
    for (const auto& g : all) {
      bool through_phi = true;
      for (int x = 0; x < e.source->n && through_phi; ++x)
        if (g.map[e.phi_index(x)] != h0.map[x]) through_phi = false;
      if (through_phi) {
        ++matches;
        if (g.map == f.map) f_seen = true;
      }
    }
    if (matches != 1) r.add("factor-count", h0.map, std::to_string(matches) + " factorizations");
    if (!f_seen) r.add("factor-identity", h0.map, "computed factor not among the enumerated ones");
  }
  return r;
}

report frontal_image_laws(const extension& e, const unary_map& t) {
  report r;
  r.subject = "frontal image laws";
  const auto& h = *e.source;

  if (t(h.one) != h.one) r.add("tau-top", {h.one}, "tau(1) differs from 1");

  for (int a = 0; a < h.n; ++a)
    if (tau_pi(e, t, e.phi_images[a]) != e.phi_images[t(a)]) r.add("phi-tau-square", {a});

  for (int i = 0; i < e.sp.size(); ++i)
    for (int a = 0; a < h.n; ++a)
      for (int b = 0; b < h.n; ++b)
        if (e.sp.points[i].contains(t(a)) && !e.sp.points[i].contains(b) &&
            !e.sp.points[i].contains(h.imp_at(b, a)))
          r.add("irreducible-point-law", {i, a, b});

  auto ups = upsets_for_checks(e.sp.order);
  for (const auto& u : ups) {
    auto tu = tau_pi(e, t, u);
    if (!u.subset_of(tu)) r.add("tau-pi-inflationary", {}, to_string(u));
    for (const auto& v : ups) {
      auto tv = tau_pi(e, t, v);
      subset both(u.universe, u.bits & v.bits);
      if (tau_pi(e, t, both).bits != (tu.bits & tv.bits))
        r.add("tau-pi-meet", {}, to_string(u) + " & " + to_string(v));
      std::uint64_t bound = v.bits | up_implication(e.sp.order, v.bits, u.bits);
      if ((tu.bits & ~bound) != 0)
        r.add("tau-pi-bound", {}, to_string(u) + " vs " + to_string(v));
    }
  }

  auto ext = extend_frontal(e, t);  // internally rechecks the generator formula
  for (size_t i = 0; i < e.elements.size(); ++i)
    if (tau_pi(e, t, e.elements[i]) != e.elements[ext(static_cast<int>(i))])
      r.add("extend-frontal", {static_cast<int>(i)});
  return r;
}

report frontal_square(const extension& e1, const unary_map& t1, const extension& e2,
                      const unary_map& t2) {
  report r;
  r.subject = "lifted frontal square";
  auto ext1 = extend_frontal(e1, t1);
  auto ext2 = extend_frontal(e2, t2);
  for (const auto& h : enumerate_homomorphisms(e1.source, e2.source, signature{})) {
    bool commutes = true;
    for (int a = 0; a < e1.source->n && commutes; ++a)
      if (h.map[t1(a)] != t2(h.map[a])) commutes = false;
    if (!commutes) continue;
    auto lifted = lift_hom(h, e1, e2);
    for (size_t i = 0; i < e1.elements.size(); ++i) {
      int via_source = lifted.map[ext1(static_cast<int>(i))];
      int via_target = ext2(lifted.map[i]);
      if (via_source != via_target) r.add("square", h.map, "element " + std::to_string(i));
    }
  }
  return r;
}

report closed_form_agreement(algebra_ptr h) {
  report r;
  r.subject = "closed forms";
  auto e = build_extension(h);
  const auto& ord = e.sp.order;
  std::uint64_t all_max = ord.maximal_in(ord.full_mask());

  if (h->bounded()) {
    auto g = find_gamma(*h);
    if (g.map) {
      for (int a = 0; a < h->n; ++a)
        if (e.phi_images[(*g.map)(a)].bits != (e.phi_images[a].bits | all_max))
          r.add("gamma-image-formula", {a});
      for (const auto& u : e.elements)
        if (gamma_pi(e, *g.map, u) != tau_pi(e, *g.map, u))
          r.add("gamma-pi-vs-tau-pi", {}, to_string(u));
    }
  }

  auto s = find_successor(*h);
  if (s.map) {
    for (int a = 0; a < h->n; ++a) {
      auto u = e.phi_images[a].bits;
      if (e.phi_images[(*s.map)(a)].bits != (u | ord.maximal_in(~u & ord.full_mask())))
        r.add("successor-image-formula", {a});
    }
    for (const auto& u : e.elements)
      if (s_pi(e, *s.map, u) != tau_pi(e, *s.map, u)) r.add("s-pi-vs-tau-pi", {}, to_string(u));
  }

  if (h->bounded()) {
    auto g = find_gabbay(*h);
    if (g.map) {
      for (int a = 0; a < h->n; ++a) {
        auto u = e.phi_images[a].bits;
        int nna = h->imp_at(h->imp_at(a, *h->zero), *h->zero);
        auto expect = u | (e.phi_images[nna].bits & ord.maximal_in(~u & ord.full_mask()));
        if (e.phi_images[(*g.map)(a)].bits != expect) r.add("gabbay-image-formula", {a});
      }
      for (const auto& u : e.elements)
        if (g_pi(e, *g.map, u) != tau_pi(e, *g.map, u)) r.add("g-pi-vs-tau-pi", {}, to_string(u));
    }
  }
  return r;
}

report min_op_oracles(const hilbert_algebra& h) {
  report r;
  r.subject = "minimum operator oracles";
  std::uint64_t total = 1;
  for (int i = 0; i < h.n; ++i) {
    total *= h.n;
    if (total > guards().hom_search_max) throw guard_error("unary map scan too large");
  }
  std::vector<unary_map> gammas, succs, gabbays;
  unary_map t{h.n, std::vector<int>(h.n)};
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    auto rest = rank;
    for (int i = h.n - 1; i >= 0; --i) {
      t.map[i] = static_cast<int>(rest % h.n);
      rest /= h.n;
    }
    if (h.bounded() && check_gamma(h, t).pass()) gammas.push_back(t);
    bool succ = check_successor(h, t).pass();
    if (succ) succs.push_back(t);
    if (h.bounded() && check_gabbay(h, t).pass()) gabbays.push_back(t);
    // a successor operation is the same thing as a frontal operator with
    // S(a)->a = a; keep the two routes honest against each other
    bool frontal_fixed = is_frontal(h, t);
    for (int a = 0; a < h.n && frontal_fixed; ++a)
      if (h.imp_at(t(a), a) != a) frontal_fixed = false;
    if (succ != frontal_fixed)
      r.add(succ ? "successor-vs-frontal" : "frontal-vs-successor", t.map);
  }

  auto compare = [&](const char* name, const min_op_result& found,
                     const std::vector<unary_map>& scanned) {
    if (found.map) {
      if (scanned.size() != 1 || !(scanned[0] == *found.map))
        r.add(name, found.map->map, "scan found " + std::to_string(scanned.size()) + " maps");
    } else {
      if (!scanned.empty()) r.add(name, {}, "find returned none but the scan found a map");
      if (found.misses.empty()) r.add(name, {}, "no map and no diagnostic");
      for (const auto& m : found.misses) {
        if (m.minimal.size() < 2) r.add(name, {m.a}, "miss without a real antichain");
        for (size_t i = 0; i < m.minimal.size(); ++i)
          for (size_t j = i + 1; j < m.minimal.size(); ++j)
            if (h.leq(m.minimal[i], m.minimal[j]) || h.leq(m.minimal[j], m.minimal[i]))
              r.add(name, {m.minimal[i], m.minimal[j]}, "diagnostic is not an antichain");
      }
    }
  };
  if (h.bounded()) compare("gamma-oracle", find_gamma(h), gammas);
  compare("successor-oracle", find_successor(h), succs);
  if (h.bounded()) compare("gabbay-oracle", find_gabbay(h), gabbays);

  // candidate sets are filters on semilattices
  if (h.has_meet() && check_axioms(h, algebra_class::is).pass()) {
    for (int a = 0; a < h.n; ++a) {
      subset sa = subset::empty(h.n);
      for (int b = 0; b < h.n; ++b)
        if (h.leq(h.imp_at(b, a), b)) sa.add(b);
      if (!is_implicative_filter(h, sa)) r.add("successor-set-filter", {a});
      if (h.bounded()) {
        subset ga = subset::empty(h.n);
        subset gb = subset::empty(h.n);
        int z = *h.zero;
        int nna = h.imp_at(h.imp_at(a, z), z);
        for (int b = 0; b < h.n; ++b) {
          if (h.leq(h.imp_at(b, z), b) && h.leq(a, b)) ga.add(b);
          if (h.leq(h.meet_at(nna, h.imp_at(b, a)), b)) gb.add(b);
        }
        if (!is_implicative_filter(h, ga)) r.add("gamma-set-filter", {a});
        if (!is_implicative_filter(h, gb)) r.add("gabbay-set-filter", {a});
      }
    }
  }
  return r;
}

report poset_successor_laws(const finite_poset& p) {
  report r;
  r.subject = "poset successor";
  for (auto m : all_upsets(p)) {
    subset u(p.size(), m);
    auto formula = poset_successor(p, u);
    auto scanned = poset_successor_by_scan(p, u);
    if (!scanned) {
      r.add("minimum-exists", u.members(), "no least solution");
      continue;
    }
    if (formula != *scanned) r.add("formula-vs-scan", u.members());
    if (up_implication(p, formula.bits, u.bits) != u.bits) r.add("s-implication-fixed", u.members());
  }
  return r;
}

report union_of_maximals_identity(const finite_poset& p) {
  report r;
  r.subject = "intersection of coderivatives";
  auto ups = all_upsets(p);
  std::vector<std::uint64_t> cod(ups.size());
  for (size_t i = 0; i < ups.size(); ++i)
    cod[i] = ups[i] | p.maximal_in(~ups[i] & p.full_mask());
  auto verify = [&](std::uint64_t lhs, std::uint64_t inter, std::uint64_t uni) {
    if (lhs != (inter | p.maximal_in(uni)))
      r.add("family-identity", {}, "meet " + to_string(subset(p.size(), inter)));
  };
  for (size_t i = 0; i < ups.size(); ++i) {
    verify(cod[i], ups[i], ~ups[i] & p.full_mask());
    for (size_t j = i; j < ups.size(); ++j) {
      auto lhs2 = cod[i] & cod[j];
      auto in2 = ups[i] & ups[j];
      auto un2 = (~ups[i] | ~ups[j]) & p.full_mask();
      verify(lhs2, in2, un2);
      for (size_t k = j; k < ups.size(); ++k)
        verify(lhs2 & cod[k], in2 & ups[k], (un2 | ~ups[k]) & p.full_mask());
    }
  }
  return r;
}

report spectrum_downset_identity(algebra_ptr h) {
  report r;
  r.subject = "downsets of phi complements";
  auto sp = spectrum(h);
  std::vector<subset> ph;
  for (int a = 0; a < h->n; ++a) ph.push_back(phi(sp, a));
  for (const auto& s : all_subsets(h->n)) {
    if (s.empty_set()) continue;
    std::uint64_t d = 0;
    for (int a : s.members()) d |= ~ph[a].bits & sp.order.full_mask();
    if (d != sp.order.down_closure(sp.order.maximal_in(d)))
      r.add("maximals-generate", s.members());
  }
  return r;
}

}  // namespace frontis::props
