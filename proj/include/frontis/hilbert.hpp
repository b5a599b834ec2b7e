#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frontis/poset.hpp"

namespace frontis {

enum class algebra_class { hilbert, bounded_hilbert, is, bounded_is, heyting_upsets };

algebra_class algebra_class_from_string(const std::string& s);
std::string to_string(algebra_class c);

/// Finite algebra (H, ->, 1) given by an operation table, with optional
/// bottom element and meet table.  Indices are dense, 0..n-1.
struct hilbert_algebra {
  int n = 1;
  std::vector<std::uint8_t> imp;                    // n*n, row-major: imp[a*n+b] = a->b
  int one = 0;
  std::optional<int> zero;                          // declared, never inferred
  std::optional<std::vector<std::uint8_t>> meet;    // n*n when present
  std::vector<std::string> labels;                  // empty: print indices
  std::string name;

  int imp_at(int a, int b) const { return imp[a * n + b]; }
  int meet_at(int a, int b) const { return (*meet)[a * n + b]; }
  bool leq(int a, int b) const { return imp_at(a, b) == one; }
  bool has_meet() const { return meet.has_value(); }
  bool bounded() const { return zero.has_value(); }
  std::string label(int i) const {
    return labels.empty() ? std::to_string(i) : labels[i];
  }

  /// Structural well-formedness: sizes and index ranges.  Distinct from the
  /// axiom checks; throws range_error with the offending cell.
  void validate_shape() const;
};

using algebra_ptr = std::shared_ptr<const hilbert_algebra>;

struct violation {
  std::string law;            // e.g. "hilbert-2", "residuation", "i3"
  std::vector<int> witness;   // offending elements, in the law's variable order
  std::string detail;
};

struct report {
  std::string subject;
  std::vector<violation> violations;

  bool pass() const { return violations.empty(); }
  void add(std::string law, std::vector<int> witness, std::string detail = "");
  void merge(const report& other);
  std::string render(const hilbert_algebra* alg = nullptr) const;
};

/// Axiom suite for the requested class.  Shape errors throw; law failures are
/// collected in the report, exhaustively (no early exit), deterministic order.
report check_axioms(const hilbert_algebra& h, algebra_class cls);

/// Order a <= b iff a->b = 1.  Validates that this is a partial order with
/// top; throws validation_error locating the failure otherwise.
finite_poset natural_order(const hilbert_algebra& h);

struct unary_map {
  int n = 0;
  std::vector<int> map;

  int operator()(int a) const { return map[a]; }
  friend bool operator==(const unary_map& a, const unary_map& b) {
    return a.n == b.n && a.map == b.map;
  }
};

/// The Heyting algebra of upsets of p presented as a hilbert_algebra with
/// meet and zero; elements are all_upsets(p) in their sorted order.
hilbert_algebra upset_algebra(const finite_poset& p);

/// Join table from the natural order, if every pair has one.
std::optional<std::vector<std::uint8_t>> join_table(const hilbert_algebra& h);
/// Meet table from the natural order, if every pair has one.
std::optional<std::vector<std::uint8_t>> glb_meet_table(const hilbert_algebra& h);

}  // namespace frontis
