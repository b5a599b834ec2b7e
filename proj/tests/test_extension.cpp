#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "frontis/error.hpp"
#include "frontis/extension.hpp"
#include "frontis/props.hpp"
#include "util.hpp"

using namespace frontis;
using testutil::chain;
using testutil::h3_algebra;
using testutil::vee_algebra;
using testutil::wrap;

namespace {

std::vector<std::uint64_t> element_bits(const extension& e) {
  std::vector<std::uint64_t> out;
  for (const auto& u : e.elements) out.push_back(u.bits);
  return out;
}

}  // namespace

TEST_CASE("extension of the three-chain is the three-chain") {
  auto e = build_extension(wrap(h3_algebra()));
  CHECK(e.sp.size() == 2);
  CHECK(element_bits(e) == std::vector<std::uint64_t>{0b00, 0b10, 0b11});
  CHECK(e.one == 2);
  CHECK(e.zero == 0);
  CHECK(e.phi_index(0) == 0);
  CHECK(e.phi_index(1) == 1);
  CHECK(e.phi_index(2) == 2);
  CHECK(e.index_of(subset(2, 0b01)) == -1);  // not an upset of the spectrum
  CHECK(check_axioms(*e.algebra, algebra_class::bounded_is).pass());
}

TEST_CASE("extension of the vee is the diamond") {
  auto e = build_extension(wrap(vee_algebra()));
  CHECK(e.sp.size() == 2);
  CHECK(element_bits(e) == std::vector<std::uint64_t>{0b00, 0b01, 0b10, 0b11});
  CHECK(e.one == 3);
  CHECK(!e.zero.has_value());  // the source has no bottom, even though the empty upset appears
  CHECK(e.algebra->imp ==
        std::vector<std::uint8_t>{3, 3, 3, 3, 2, 3, 2, 3, 1, 1, 3, 3, 0, 1, 2, 3});
  CHECK(*e.algebra->meet ==
        std::vector<std::uint8_t>{0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3});

  CHECK(e.gens[0] == std::vector<int>{0, 1});  // empty upset = phi(x) meet phi(y)
  CHECK(e.gens[1] == std::vector<int>{0});
  CHECK(e.gens[2] == std::vector<int>{1});
  CHECK(e.gens[3] == std::vector<int>{2});
  CHECK(check_axioms(*e.algebra, algebra_class::is).pass());
}

TEST_CASE("extension sizes") {
  CHECK(build_extension(wrap(chain(5, true))).elements.size() == 5);
  CHECK(build_extension(wrap(upset_algebra(testutil::antichain(2)))).elements.size() == 4);
  CHECK(build_extension(wrap(chain(2, true))).elements.size() == 2);
}

TEST_CASE("extension invariants on the stock algebras") {
  for (const auto& h : {h3_algebra(), vee_algebra(), chain(5, true),
                        upset_algebra(testutil::antichain(2)),
                        upset_algebra(finite_poset::from_covers(3, {{2, 0}, {2, 1}}))}) {
    auto r = props::extension_invariants(wrap(h));
    INFO(h.name, ": ", r.render(&h));
    CHECK(r.pass());
  }
}

TEST_CASE("extension invariants across every algebra with at most 3 elements") {
  for (int n = 1; n <= 3; ++n)
    for (auto cls : {algebra_class::hilbert, algebra_class::bounded_hilbert})
      for (const auto& h : enumerate_algebras(n, cls)) {
        auto r = props::extension_invariants(wrap(h));
        INFO(r.render(&h));
        CHECK(r.pass());
      }
}

TEST_CASE("factorization is unique against exhaustive enumeration") {
  auto ev = build_extension(wrap(vee_algebra()));
  auto e3 = build_extension(wrap(h3_algebra()));
  for (auto target : {wrap(chain(2, true)), wrap(h3_algebra()),
                      wrap(upset_algebra(testutil::antichain(2)))}) {
    auto rv = props::universal_property(ev, target);
    INFO(rv.render());
    CHECK(rv.pass());
    auto r3 = props::universal_property(e3, target);
    INFO(r3.render());
    CHECK(r3.pass());
  }
}

TEST_CASE("lifting a collapse sends everything to the top") {
  auto h3 = wrap(h3_algebra());
  auto h2 = wrap(chain(2));
  auto e3 = build_extension(h3);
  auto e2 = build_extension(h2);
  homomorphism f{h3, h2, {1, 1, 1}, {}, {}, {}};
  REQUIRE(check_homomorphism(f));
  auto lifted = lift_hom(f, e3, e2);
  CHECK(lifted.map == std::vector<int>{1, 1, 1});
  CHECK(lifted.sig.meet);
  CHECK(check_homomorphism(lifted));
}

TEST_CASE("lifting the identity gives the identity") {
  auto h3 = wrap(h3_algebra());
  auto e3 = build_extension(h3);
  auto lifted = lift_hom(identity_homomorphism(h3, {}), e3, e3);
  CHECK(lifted.map == std::vector<int>{0, 1, 2});
}

TEST_CASE("lifting respects composition") {
  auto v = wrap(vee_algebra());
  auto h3 = wrap(h3_algebra());
  auto h2 = wrap(chain(2));
  auto ev = build_extension(v);
  auto e3 = build_extension(h3);
  auto e2 = build_extension(h2);
  auto fs = enumerate_homomorphisms(v, h3, {});
  auto gs = enumerate_homomorphisms(h3, h2, {});
  CHECK(!fs.empty());
  CHECK(!gs.empty());
  for (const auto& f : fs)
    for (const auto& g : gs) {
      auto lhs = lift_hom(compose(g, f), ev, e2);
      auto rhs = compose(lift_hom(g, e3, e2), lift_hom(f, ev, e3));
      CHECK(lhs.map == rhs.map);
    }
}

TEST_CASE("the lift commutes with phi") {
  auto v = wrap(vee_algebra());
  auto h3 = wrap(h3_algebra());
  auto ev = build_extension(v);
  auto e3 = build_extension(h3);
  for (const auto& f : enumerate_homomorphisms(v, h3, {})) {
    auto lifted = lift_hom(f, ev, e3);
    for (int a = 0; a < 3; ++a) CHECK(lifted.map[ev.phi_index(a)] == e3.phi_index(f.map[a]));
  }
}

TEST_CASE("lift preconditions") {
  auto h3 = wrap(h3_algebra());
  auto h2 = wrap(chain(2));
  auto v = wrap(vee_algebra());
  auto e3 = build_extension(h3);
  auto e2 = build_extension(h2);
  auto ev = build_extension(v);
  homomorphism bad{h3, h2, {0, 0, 0}, {}, {}, {}};  // sends the unit to 0
  CHECK(!check_homomorphism(bad));
  CHECK_THROWS_AS(lift_hom(bad, e3, e2), precondition_error);
  homomorphism f{h3, h2, {1, 1, 1}, {}, {}, {}};
  CHECK_THROWS_AS(lift_hom(f, ev, e2), precondition_error);
  CHECK_THROWS_AS(lift_hom(f, e3, ev), precondition_error);
}

TEST_CASE("factor golden: the Goedel map out of the three-chain") {
  auto h3 = wrap(h3_algebra());
  auto h2 = wrap(chain(2, true));
  auto e3 = build_extension(h3);
  homomorphism h{h3, h2, {0, 1, 1}, {}, {}, {}};
  REQUIRE(check_homomorphism(h));
  auto f = universal_factor(e3, h2, h);
  CHECK(f.map == std::vector<int>{0, 1, 1});
  CHECK(f.sig.meet);
  CHECK(check_homomorphism(f));
  for (int a = 0; a < 3; ++a) CHECK(f.map[e3.phi_index(a)] == h.map[a]);
}

TEST_CASE("factor preconditions") {
  auto h3 = wrap(h3_algebra());
  auto h2 = wrap(chain(2, true));
  auto v = wrap(vee_algebra());
  auto e3 = build_extension(h3);
  homomorphism h{h3, h2, {0, 1, 1}, {}, {}, {}};
  CHECK_THROWS_AS(universal_factor(e3, v, {h3, v, {0, 1, 2}, {}, {}, {}}),
                  precondition_error);  // target lacks a meet
  homomorphism bad{h3, h2, {1, 0, 1}, {}, {}, {}};
  CHECK_THROWS_AS(universal_factor(e3, h2, bad), precondition_error);
  auto ev = build_extension(v);
  CHECK_THROWS_AS(universal_factor(ev, h2, h), precondition_error);  // endpoints differ
}
