#pragma once

#include <optional>
#include <vector>

#include "frontis/hilbert.hpp"

namespace frontis {

/// Operations a homomorphism must preserve; -> and 1 always belong.
struct signature {
  bool meet = false;
  bool zero = false;
  bool tau = false;

  friend bool operator==(const signature& a, const signature& b) {
    return a.meet == b.meet && a.zero == b.zero && a.tau == b.tau;
  }
};

struct homomorphism {
  algebra_ptr source;
  algebra_ptr target;
  std::vector<int> map;
  signature sig;
  // Populated when sig.tau: the square h(t1(a)) = t2(h(a)) is part of the check.
  std::optional<unary_map> source_tau;
  std::optional<unary_map> target_tau;
};

/// Pointwise table scan over every operation in the signature.  Throws
/// precondition_error when the signature mentions structure an algebra lacks.
bool check_homomorphism(const homomorphism& h);

/// Exhaustive, in lexicographic order of the map arrays.  Refuses when
/// target.n^source.n exceeds the hom search guard.
std::vector<homomorphism> enumerate_homomorphisms(algebra_ptr source, algebra_ptr target,
                                                  signature sig,
                                                  const std::optional<unary_map>& source_tau = {},
                                                  const std::optional<unary_map>& target_tau = {});

homomorphism identity_homomorphism(algebra_ptr a, signature sig);
homomorphism compose(const homomorphism& outer, const homomorphism& inner);

}  // namespace frontis
