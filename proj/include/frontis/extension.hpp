#pragma once

#include <vector>

#include "frontis/filters.hpp"
#include "frontis/hom.hpp"

namespace frontis {

/// The implicative semilattice generated by the phi-images inside the upsets
/// of the spectrum: finite intersections of phi(a), closed under the upset
/// implication.  Element i is the upset elements[i] over sp.order; gens[i]
/// is the canonical generating tuple (least cardinality, then lexicographic)
/// with elements[i] equal to the intersection of phi over it.
struct extension {
  algebra_ptr source;
  spectrum_poset sp;
  std::vector<subset> phi_images;       // per source element
  std::vector<subset> elements;         // sorted by (cardinality, bits)
  std::vector<std::vector<int>> gens;   // canonical generators per element
  int one = 0;                          // index of the full upset
  std::optional<int> zero;              // index of the empty upset when source is bounded
  algebra_ptr algebra;                  // the extension as a meet-and-implication table

  int index_of(const subset& u) const;  // -1 when u is not an element
  int phi_index(int a) const;           // element index of phi(a)
};

/// Builds the whole structure and verifies its own invariants (closure under
/// the implication, phi preserving ->/1 and 0 when present, the semilattice
/// axiom suite on the result).  Violations raise internal_error.
extension build_extension(algebra_ptr h);

/// Unique semilattice map with lift(phi1(a)) = phi2(h(a)): image of an
/// element is the intersection of phi2 over the h-image of its generators.
/// Independence from the generator choice is re-checked on an alternative
/// generating tuple when one exists.
homomorphism lift_hom(const homomorphism& h, const extension& e1, const extension& e2);

/// Factorization through phi: for h : H -> A with A an implicative
/// semilattice, the unique meet-and-implication map f with f(phi(a)) = h(a).
homomorphism universal_factor(const extension& e, algebra_ptr a, const homomorphism& h);

}  // namespace frontis
