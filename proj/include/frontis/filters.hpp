#pragma once

#include <memory>
#include <vector>

#include "frontis/hilbert.hpp"
#include "frontis/subset.hpp"

namespace frontis {

/// Contains 1 and is closed under modus ponens.
bool is_implicative_filter(const hilbert_algebra& h, const subset& s);
/// Nonempty up-directed downset of the natural order.
bool is_order_ideal(const hilbert_algebra& h, const subset& s);

/// Least implicative filter containing x (iterated closure).
subset generate_filter(const hilbert_algebra& h, const subset& x);
/// Same set by the word characterization: b is reachable when some chain
/// a1->(a2->...(ak->b)...) with ai in x evaluates to 1.  Independent route,
/// used to cross-check generate_filter.
subset generate_filter_by_words(const hilbert_algebra& h, const subset& x);

/// Every filter including the improper one, sorted by (cardinality, bits).
/// Eager 2^n scan, guarded by filter_scan_max_n.
std::vector<subset> all_filters(const hilbert_algebra& h);

/// Meet-irreducibility in the filter lattice: proper, and any intersection
/// F1 cap F2 = F with F1, F2 strictly above forces F1 = F or F2 = F.
bool is_irreducible(const hilbert_algebra& h, const subset& f);
/// Order-theoretic criterion: any two elements outside F share an upper
/// bound outside F.  Equivalent to irreducibility for proper filters.
bool sc_criterion(const hilbert_algebra& h, const subset& f);

/// Irreducible filters under inclusion.  Index order is inherited from
/// all_filters; at most spectrum_max points.
struct spectrum_poset {
  algebra_ptr source;
  std::vector<subset> points;  // filters, as subsets of the carrier
  finite_poset order;          // inclusion

  int size() const { return static_cast<int>(points.size()); }
};

spectrum_poset spectrum(algebra_ptr h);

/// phi(a): the spectrum points whose filter contains a.  Always an upset.
subset phi(const spectrum_poset& sp, int a);

/// First spectrum point (in index order) containing f and disjoint from i.
/// Requires f a filter, i an order-ideal, f disjoint from i.
subset separate(const hilbert_algebra& h, const subset& f, const subset& i);

/// Spectrum point extending f and avoiding a (the a-not-in-F separation).
subset witness_omitting(const hilbert_algebra& h, const subset& f, int a);

}  // namespace frontis
