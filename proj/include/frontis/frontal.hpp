#pragma once

#include <optional>
#include <vector>

#include "frontis/extension.hpp"

namespace frontis {

/// Which axiom set a unary operator is checked against.
///   hilbert:      t(a->b) <= t(a)->t(b),  a <= t(a),  t(a) <= ((b->a)->b)->b
///   semilattice:  meet distribution t(a&b) = t(a)&t(b) plus the last two
///   heyting:      meet distribution, a <= t(a), t(a) <= b v (b->a)
enum class frontal_flavor { hilbert, semilattice, heyting };

report check_frontal(const hilbert_algebra& h, const unary_map& t, frontal_flavor flavor);
bool is_frontal(const hilbert_algebra& h, const unary_map& t);

/// Additional laws on top of frontality, each as a full witness report.
report check_gamma(const hilbert_algebra& h, const unary_map& t);      // needs zero
report check_successor(const hilbert_algebra& h, const unary_map& t);
report check_gabbay(const hilbert_algebra& h, const unary_map& t);     // needs zero

/// All unary maps passing check_frontal(hilbert), in lexicographic order.
std::vector<unary_map> enumerate_frontal_operators(const hilbert_algebra& h);

/// U together with the maximal elements of its complement.
subset coderivative(const finite_poset& p, const subset& u);

/// The canonical frontal operator on the extension: P is in tau_pi(U) when
/// every spectrum point whose filter pulls back along t into P lies in U.
subset tau_pi(const extension& e, const unary_map& t, const subset& u);

/// tau_pi restricted to the extension's elements, as a map on element
/// indices; each image is cross-checked against the generator formula
/// intersection of phi(t(a)).
unary_map extend_frontal(const extension& e, const unary_map& t);

/// Pointwise minimum construction for the three canonical operators.  When
/// some element's candidate set has no least member the result is empty and
/// misses lists, per offending element, the minimal candidates (an antichain).
struct min_op_result {
  std::optional<unary_map> map;
  struct miss {
    int a;
    std::vector<int> minimal;
  };
  std::vector<miss> misses;
};

min_op_result find_gamma(const hilbert_algebra& h);      // needs zero
min_op_result find_successor(const hilbert_algebra& h);
min_op_result find_gabbay(const hilbert_algebra& h);     // needs zero

/// Successor on the upsets of an arbitrary finite poset: U union the maximal
/// elements of its complement.
subset poset_successor(const finite_poset& p, const subset& u);
/// Oracle route: least upset V with (V => U) <= V, by scanning all upsets.
std::optional<subset> poset_successor_by_scan(const finite_poset& p, const subset& u);

/// Closed forms on the extension for the three operators; each validates its
/// operator's classification before evaluating.
subset gamma_pi(const extension& e, const unary_map& op, const subset& u);
subset s_pi(const extension& e, const unary_map& op, const subset& u);
subset g_pi(const extension& e, const unary_map& op, const subset& u);

}  // namespace frontis
