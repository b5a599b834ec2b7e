#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "frontis/error.hpp"
#include "frontis/frontal.hpp"
#include "frontis/props.hpp"
#include "util.hpp"

using namespace frontis;
using testutil::antichain;
using testutil::chain;
using testutil::h3_algebra;
using testutil::vee_algebra;
using testutil::wrap;

namespace {

hilbert_algebra no_gamma_algebra() {
  hilbert_algebra h;
  h.n = 4;
  h.one = 0;
  h.zero = 1;
  h.imp = {0, 1, 2, 3, 0, 0, 0, 0, 0, 1, 0, 3, 0, 1, 2, 0};
  h.name = "NoGamma4";
  return h;
}

std::vector<unary_map> all_unary_maps(int n) {
  std::vector<unary_map> out;
  std::vector<int> m(n, 0);
  while (true) {
    out.push_back({n, m});
    int i = n - 1;
    while (i >= 0 && m[i] == n - 1) m[i--] = 0;
    if (i < 0) return out;
    ++m[i];
  }
}

}  // namespace

TEST_CASE("frontal flavors on the three-chain") {
  auto h = h3_algebra();
  unary_map succ{3, {1, 2, 2}};
  CHECK(check_frontal(h, succ, frontal_flavor::hilbert).pass());
  CHECK(check_frontal(h, succ, frontal_flavor::semilattice).pass());
  CHECK(check_frontal(h, succ, frontal_flavor::heyting).pass());
  CHECK(is_frontal(h, succ));

  unary_map const_top{3, {2, 2, 2}};
  auto r = check_frontal(h, const_top, frontal_flavor::hilbert);
  CHECK(!r.pass());
  bool i3_at_01 = false;
  for (const auto& v : r.violations)
    if (v.law == "i3" && v.witness == std::vector<int>{0, 1}) i3_at_01 = true;
  CHECK(i3_at_01);

  // the meet flavors need the meet, the heyting flavor also the joins
  CHECK_THROWS_AS(check_frontal(vee_algebra(), {3, {0, 1, 2}}, frontal_flavor::semilattice),
                  precondition_error);
  CHECK_THROWS_AS(check_frontal(vee_algebra(), {3, {0, 1, 2}}, frontal_flavor::heyting),
                  precondition_error);
  CHECK_THROWS_AS(check_frontal(h, {2, {0, 1}}, frontal_flavor::hilbert), precondition_error);
  CHECK_THROWS_AS(check_frontal(h, {3, {0, 1, 9}}, frontal_flavor::hilbert), range_error);
}

TEST_CASE("frontal operator enumeration goldens") {
  auto two = enumerate_frontal_operators(chain(2));
  CHECK(two == std::vector<unary_map>{{2, {0, 1}}, {2, {1, 1}}});

  auto three = enumerate_frontal_operators(h3_algebra());
  CHECK(three == std::vector<unary_map>{
                     {3, {0, 1, 2}}, {3, {0, 2, 2}}, {3, {1, 1, 2}}, {3, {1, 2, 2}}});
  for (const auto& t : three) CHECK(is_frontal(h3_algebra(), t));
}

TEST_CASE("successor laws imply the frontal laws") {
  std::vector<hilbert_algebra> algs = {h3_algebra(), upset_algebra(antichain(2)),
                                       no_gamma_algebra()};
  for (int n = 1; n <= 3; ++n)
    for (const auto& h : enumerate_algebras(n, algebra_class::hilbert)) algs.push_back(h);
  for (const auto& h : algs)
    for (const auto& t : all_unary_maps(h.n))
      if (check_successor(h, t).pass()) CHECK(is_frontal(h, t));
}

TEST_CASE("minimum operators on the three-chain") {
  auto h = h3_algebra();
  auto s = find_successor(h);
  REQUIRE(s.map.has_value());
  CHECK(s.map->map == std::vector<int>{1, 2, 2});
  CHECK(s.misses.empty());
  CHECK(check_successor(h, *s.map).pass());

  auto g = find_gamma(h);
  REQUIRE(g.map.has_value());
  CHECK(g.map->map == std::vector<int>{1, 1, 2});
  CHECK(check_gamma(h, *g.map).pass());

  auto gb = find_gabbay(h);
  REQUIRE(gb.map.has_value());
  CHECK(gb.map->map == std::vector<int>{0, 2, 2});
  CHECK(check_gabbay(h, *gb.map).pass());
}

TEST_CASE("an algebra missing both gamma and successor") {
  auto h = no_gamma_algebra();
  REQUIRE(check_axioms(h, algebra_class::bounded_hilbert).pass());

  auto g = find_gamma(h);
  CHECK(!g.map.has_value());
  REQUIRE(g.misses.size() == 1);
  CHECK(g.misses[0].a == 1);
  CHECK(g.misses[0].minimal == std::vector<int>{2, 3});

  auto s = find_successor(h);
  CHECK(!s.map.has_value());
  REQUIRE(s.misses.size() == 1);
  CHECK(s.misses[0].a == 1);
  CHECK(s.misses[0].minimal == std::vector<int>{2, 3});

  auto gb = find_gabbay(h);
  REQUIRE(gb.map.has_value());
  CHECK(gb.map->map == std::vector<int>{0, 1, 0, 0});
}

TEST_CASE("gamma and gabbay require a bottom") {
  auto v = vee_algebra();
  CHECK_THROWS_AS(check_gamma(v, {3, {0, 1, 2}}), precondition_error);
  CHECK_THROWS_AS(check_gabbay(v, {3, {0, 1, 2}}), precondition_error);
  CHECK_THROWS_AS(find_gamma(v), precondition_error);
  CHECK_THROWS_AS(find_gabbay(v), precondition_error);
  CHECK(find_successor(v).map.has_value());  // successor needs no bottom
}

TEST_CASE("minimum operator scan oracles") {
  std::vector<hilbert_algebra> algs = {h3_algebra(), upset_algebra(antichain(2)),
                                       no_gamma_algebra(), chain(5, true)};
  for (int n = 1; n <= 3; ++n)
    for (const auto& h : enumerate_algebras(n, algebra_class::bounded_hilbert)) algs.push_back(h);
  for (const auto& h : algs) {
    auto r = props::min_op_oracles(h);
    INFO(h.name, ": ", r.render(&h));
    CHECK(r.pass());
  }
}

TEST_CASE("coderivative goldens on the two-chain") {
  auto p = finite_poset::from_covers(2, {{0, 1}});
  CHECK(coderivative(p, subset(2, 0b00)) == subset(2, 0b10));
  CHECK(coderivative(p, subset(2, 0b10)) == subset(2, 0b11));
  CHECK(coderivative(p, subset(2, 0b11)) == subset(2, 0b11));
}

TEST_CASE("extending the successor of the three-chain") {
  auto e = build_extension(wrap(h3_algebra()));
  unary_map succ{3, {1, 2, 2}};
  auto ext = extend_frontal(e, succ);
  CHECK(ext.map == std::vector<int>{1, 2, 2});
  for (int i = 0; i < 3; ++i)
    CHECK(tau_pi(e, succ, e.elements[i]) == e.elements[ext.map[i]]);
}

TEST_CASE("image laws for every frontal operator on the stock algebras") {
  for (const auto& h : {h3_algebra(), vee_algebra(), upset_algebra(antichain(2))}) {
    auto hp = wrap(h);
    auto e = build_extension(hp);
    for (const auto& t : enumerate_frontal_operators(h)) {
      auto r = props::frontal_image_laws(e, t);
      INFO(h.name, ": ", r.render(&h));
      CHECK(r.pass());
    }
  }
}

TEST_CASE("extension squares for frontal homomorphisms") {
  auto h3 = wrap(h3_algebra());
  auto h2 = wrap(chain(2));
  auto e3 = build_extension(h3);
  auto e2 = build_extension(h2);
  auto r = props::frontal_square(e3, {3, {1, 2, 2}}, e2, {2, {1, 1}});
  INFO(r.render());
  CHECK(r.pass());

  auto rv = props::frontal_square(build_extension(wrap(vee_algebra())), {3, {0, 1, 2}}, e2,
                                  {2, {0, 1}});
  INFO(rv.render());
  CHECK(rv.pass());
}

TEST_CASE("closed form agreement on the stock algebras") {
  std::vector<hilbert_algebra> algs = {h3_algebra(), chain(5, true), upset_algebra(antichain(2)),
                                       upset_algebra(finite_poset::from_covers(3, {{2, 0}, {2, 1}})),
                                       no_gamma_algebra()};
  for (int n = 1; n <= 3; ++n)
    for (const auto& h : enumerate_algebras(n, algebra_class::bounded_hilbert)) algs.push_back(h);
  for (const auto& h : algs) {
    auto r = props::closed_form_agreement(wrap(h));
    INFO(h.name, ": ", r.render(&h));
    CHECK(r.pass());
  }
}

TEST_CASE("closed forms validate their operator") {
  auto e = build_extension(wrap(h3_algebra()));
  unary_map succ{3, {1, 2, 2}};
  unary_map ident{3, {0, 1, 2}};
  CHECK(s_pi(e, succ, e.elements[0]) == e.elements[1]);
  CHECK_THROWS_AS(s_pi(e, ident, e.elements[0]), precondition_error);
  CHECK_THROWS_AS(gamma_pi(e, succ, e.elements[0]), precondition_error);
  unary_map gam{3, {1, 1, 2}};
  CHECK(gamma_pi(e, gam, e.elements[0]) == e.elements[1]);
  unary_map gab{3, {0, 2, 2}};
  CHECK(g_pi(e, gab, e.elements[0]) == e.elements[0]);
}

TEST_CASE("poset successor goldens") {
  auto c3 = finite_poset::from_covers(3, {{0, 1}, {1, 2}});
  CHECK(poset_successor(c3, subset(3, 0b000)) == subset(3, 0b100));
  CHECK(poset_successor(c3, subset(3, 0b100)) == subset(3, 0b110));
  CHECK(poset_successor(c3, subset(3, 0b110)) == subset(3, 0b111));
  CHECK(poset_successor(c3, subset(3, 0b111)) == subset(3, 0b111));

  auto v = finite_poset::from_covers(3, {{2, 0}, {2, 1}});
  CHECK(poset_successor(v, subset(3, 0b000)) == subset(3, 0b011));
  CHECK(poset_successor(v, subset(3, 0b001)) == subset(3, 0b011));
  CHECK(poset_successor(v, subset(3, 0b011)) == subset(3, 0b111));

  for (auto& p : {c3, v, antichain(3), finite_poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})}) {
    auto r = props::poset_successor_laws(p);
    INFO(r.render());
    CHECK(r.pass());
    for (auto u : all_upsets(p)) {
      auto scan = poset_successor_by_scan(p, subset(p.size(), u));
      REQUIRE(scan.has_value());
      CHECK(*scan == poset_successor(p, subset(p.size(), u)));
    }
  }
}

TEST_CASE("the successor of an upset algebra is the poset successor") {
  for (auto& p : {antichain(2), finite_poset::from_covers(3, {{2, 0}, {2, 1}}),
                  finite_poset::from_covers(3, {{0, 1}, {1, 2}})}) {
    auto h = upset_algebra(p);
    auto ups = all_upsets(p);
    auto s = find_successor(h);
    REQUIRE(s.map.has_value());
    for (int i = 0; i < h.n; ++i) {
      auto expect = poset_successor(p, subset(p.size(), ups[i]));
      CHECK(ups[s.map->map[i]] == expect.bits);
    }
  }
}
