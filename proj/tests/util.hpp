#pragma once

#include <memory>
#include <string>
#include <vector>

#include "frontis/hilbert.hpp"
#include "frontis/poset.hpp"

#ifndef FRONTIS_FIXTURES
#define FRONTIS_FIXTURES "fixtures"
#endif

namespace testutil {

inline std::string fixture(const std::string& name) {
  return std::string(FRONTIS_FIXTURES) + "/" + name;
}

inline frontis::algebra_ptr wrap(frontis::hilbert_algebra h) {
  return std::make_shared<const frontis::hilbert_algebra>(std::move(h));
}

/// Goedel chain 0 < 1 < ... < n-1 with a->b = 1 when a <= b, else b.
inline frontis::hilbert_algebra chain(int n, bool with_meet = false) {
  frontis::hilbert_algebra h;
  h.n = n;
  h.one = n - 1;
  h.zero = 0;
  h.imp.assign(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) h.imp[a * n + b] = static_cast<std::uint8_t>(a <= b ? n - 1 : b);
  if (with_meet) {
    std::vector<std::uint8_t> meet(n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) meet[a * n + b] = static_cast<std::uint8_t>(a < b ? a : b);
    h.meet = std::move(meet);
  }
  h.name = "chain" + std::to_string(n);
  return h;
}

inline frontis::finite_poset antichain(int n) { return frontis::finite_poset::from_covers(n, {}); }

/// The three-element algebra with incomparable x, y below 1.
inline frontis::hilbert_algebra vee_algebra() {
  frontis::hilbert_algebra h;
  h.n = 3;
  h.one = 2;
  h.imp = {2, 1, 2, 0, 2, 2, 0, 1, 2};
  h.labels = {"x", "y", "1"};
  h.name = "Hprime";
  return h;
}

inline frontis::hilbert_algebra h3_algebra() {
  frontis::hilbert_algebra h;
  h.n = 3;
  h.one = 2;
  h.zero = 0;
  h.imp = {2, 2, 2, 0, 2, 2, 0, 1, 2};
  h.meet = std::vector<std::uint8_t>{0, 0, 0, 0, 1, 1, 0, 1, 2};
  h.labels = {"0", "a", "1"};
  h.name = "H3";
  return h;
}

}  // namespace testutil
