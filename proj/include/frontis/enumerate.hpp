#pragma once

#include <vector>

#include "frontis/hilbert.hpp"

namespace frontis {

/// Lexicographically least implication table among all relabelings.  The
/// diagonal pins 1 at index 0 in every canonical table.
std::vector<std::uint8_t> canonical_table(const hilbert_algebra& h);
bool is_canonical(const hilbert_algebra& h);

/// One representative per isomorphism class, canonical tables ascending.
/// cls selects hilbert or bounded_hilbert; bounded representatives carry
/// their zero.  Guarded by enumerate_max_n and the table search node limit.
std::vector<hilbert_algebra> enumerate_algebras(int n, algebra_class cls);

/// The representatives whose natural order has all binary meets and which
/// pass the semilattice axiom suite with that meet attached.
std::vector<hilbert_algebra> enumerate_semilattices(int n, bool bounded_only);

enum class canonical_op { successor, gamma, gabbay };

/// Representatives of the class lacking the requested operator, ascending.
std::vector<hilbert_algebra> search_without(int n, algebra_class cls, canonical_op op);

}  // namespace frontis
