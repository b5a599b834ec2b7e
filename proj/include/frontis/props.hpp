#pragma once

#include "frontis/enumerate.hpp"
#include "frontis/extension.hpp"
#include "frontis/frontal.hpp"

namespace frontis::props {

// Property suites shared by the verify command, the unit tests and the
// acceptance driver.  Each returns a report with one violation per broken
// instance; pass() means the property held everywhere it was checked.

report basic_laws(const hilbert_algebra& h);            // 1->a=a, a<=b->a, exchange, composition, monotonicity
report filter_oracles(algebra_ptr h);                   // closure == word route == least filter in the 2^n scan
report filter_lattice_distributive(algebra_ptr h);
report irreducibility_criterion(algebra_ptr h);         // lattice definition vs the upper-bound criterion
report separation_laws(algebra_ptr h);                  // filter extension, order separation, a->b outside F
report implication_compatible_pullback(algebra_ptr src, algebra_ptr tgt);
report phi_laws(algebra_ptr h);                         // injectivity, phi(a->b) identity, n-ary residuation
report up_implication_routes(const finite_poset& p);    // downset route == pointwise route, residuation on upsets
report extension_invariants(algebra_ptr h);             // plus the size and isomorphism facts in the meet case
report universal_property(const extension& e, algebra_ptr a);
report frontal_image_laws(const extension& e, const unary_map& t);
report frontal_square(const extension& e1, const unary_map& t1, const extension& e2,
                      const unary_map& t2);
report closed_form_agreement(algebra_ptr h);            // gamma_pi / s_pi / g_pi vs tau_pi, image formulas
report min_op_oracles(const hilbert_algebra& h);        // find_* vs exhaustive unary-map scans, filter facts
report poset_successor_laws(const finite_poset& p);     // formula == scan minimum, S(U)=>U = U
report union_of_maximals_identity(const finite_poset& p);
report spectrum_downset_identity(algebra_ptr h);

/// Upsets used by a property check: everything when the poset is small,
/// otherwise sample_count pseudo-random upsets from the recorded seed.
std::vector<subset> upsets_for_checks(const finite_poset& p);

}  // namespace frontis::props
