#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cutgroups/class_table.hpp"
#include "cutgroups/errors.hpp"
#include "cutgroups/finite_group.hpp"

using namespace cutgroups;

namespace {

FiniteGroup named(const char* id) { return realize(make_named(id)); }

std::vector<std::uint64_t> sorted_sizes(const ClassTable& t) {
  std::vector<std::uint64_t> s;
  for (Count c : t.sizes)
    s.push_back(static_cast<std::uint64_t>(c));
  std::sort(s.begin(), s.end());
  return s;
}

// Brute-force oracle: classes as sets {g^-1 x g : g in G}.
std::vector<std::uint64_t> brute_class_sizes(const FiniteGroup& g) {
  std::vector<char> done(g.order(), 0);
  std::vector<std::uint64_t> sizes;
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[x])
      continue;
    std::vector<char> cls(g.order(), 0);
    for (Elem y = 0; y < g.order(); ++y)
      cls[g.conj(x, y)] = 1;
    std::uint64_t n = 0;
    for (Elem z = 0; z < g.order(); ++z) {
      if (cls[z]) {
        done[z] = 1;
        ++n;
      }
    }
    sizes.push_back(n);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

void check_group_laws(const FiniteGroup& g) {
  std::uint64_t lcm = 1;
  for (Elem x = 0; x < g.order(); ++x) {
    REQUIRE(g.mul(x, 0) == x);
    REQUIRE(g.mul(0, x) == x);
    REQUIRE(g.mul(x, g.inv(x)) == 0);
    REQUIRE(g.order() % g.elem_order(x) == 0);
    lcm = std::lcm(lcm, std::uint64_t{g.elem_order(x)});
  }
  CHECK(lcm == g.exponent());
}

}  // namespace

TEST_CASE("realize: parameter examples") {
  auto d10 = realize(make_metacyclic(5, 2, 5, 4));
  CHECK(d10.order() == 10);
  auto q8 = realize(make_metacyclic(4, 2, 2, 3));
  CHECK(q8.order() == 8);
  int involutions = 0;
  for (Elem x = 0; x < q8.order(); ++x)
    involutions += q8.elem_order(x) == 2;
  CHECK(involutions == 1);
  CHECK(named("G1").order() == 32);
  CHECK(named("G2").order() == 32);
  CHECK(realize(make_abelian({1})).order() == 1);
}

TEST_CASE("realize: group laws hold on every backend") {
  for (const char* id : {"G1", "G2", "D10", "Q8", "Q16", "Q12", "Sym(4)", "Alt(5)", "D2"})
    check_group_laws(named(id));
  check_group_laws(realize(make_metacyclic(28, 6, 14, 3)));
  check_group_laws(realize(make_abelian({2, 4, 3})));
  check_group_laws(realize(make_product({make_named("Q8"), make_abelian({3})})));
}

TEST_CASE("realize: metacyclic relations are audited") {
  // b^-1 a b = a^r with a = (1,0), b = (0,1).
  auto g = realize(make_metacyclic(13, 6, 13, 4));
  const Elem a = 6, b = 1;
  CHECK(g.conj(a, b) == g.pow(a, 4));
  CHECK(g.pow(b, 6) == 0);
  CHECK(g.elem_order(a) == 13);
}

TEST_CASE("realize: errors") {
  CHECK_THROWS_AS(realize(make_metacyclic(5, 2, 5, 2)), InvalidSpec);  // 2^2 != 1 mod 5
  CHECK_THROWS_AS(realize(make_metacyclic(8, 2, 3, 7)), InvalidSpec);  // 3 does not divide 8
  CHECK_THROWS_AS(realize(make_metacyclic(8, 2, 2, 3)), InvalidSpec);  // l(r-1) != 0 mod n
  CHECK_THROWS_AS(realize(make_named("Sym(7)"), 1000), OrderCapExceeded);
  CHECK_THROWS_AS(realize(make_abelian({100, 100}), 5000), OrderCapExceeded);
  CHECK_THROWS_AS(realize(make_named("Q12x")), InvalidSpec);
  CHECK_THROWS_AS(realize(make_named("Q6")), InvalidSpec);
  // Action that is not an automorphism of order dividing t.
  CHECK_THROWS_AS(realize(GroupSpec{AbelianByCyclicSpec{{8}, {{3}}, 3}}), InvalidSpec);
  CHECK_THROWS_AS(realize(GroupSpec{AbelianByCyclicSpec{{8}, {{2}}, 2}}), InvalidSpec);
}

TEST_CASE("conjugacy_classes: examples and brute-force oracle") {
  CHECK(sorted_sizes(conjugacy_classes(named("Sym(3)"))) == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(sorted_sizes(conjugacy_classes(realize(make_metacyclic(5, 2, 5, 4)))) ==
        std::vector<std::uint64_t>{1, 2, 2, 5});
  CHECK(conjugacy_classes(realize(make_abelian({12}))).num_classes() == 12);
  for (const char* id : {"G1", "G2", "Q16", "Sym(4)", "Alt(5)", "D12", "Q24"}) {
    auto g = named(id);
    CHECK(sorted_sizes(conjugacy_classes(g)) == brute_class_sizes(g));
  }
}

TEST_CASE("conjugacy_classes: table invariants") {
  for (const char* id : {"G1", "G2", "Q8", "Sym(5)", "Alt(6)", "D20"}) {
    auto g = named(id);
    auto t = conjugacy_classes(g);
    Count total = 0;
    for (std::size_t k = 0; k < t.num_classes(); ++k) {
      total += t.sizes[k];
      CHECK(g.order() % static_cast<std::uint64_t>(t.sizes[k]) == 0);
      CHECK(t.class_of[t.reps[k]] == k);
      CHECK(t.inverse_class[t.inverse_class[k]] == k);
      CHECK(t.power_class(k, 1) == k);
      CHECK(t.power_class(k, -1) == t.inverse_class[k]);
      const std::int64_t o = t.rep_order[k];
      for (std::int64_t j = -2 * o; j <= 2 * o; ++j)
        CHECK(t.power_class(k, j) == t.class_of[g.pow(t.reps[k], j)]);
      // Representative is the least element of its class.
      for (Elem x = 0; x < t.reps[k]; ++x)
        CHECK(t.class_of[x] != k);
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("centralizer and cyclic_normalizer") {
  auto s3 = named("Sym(3)");
  auto q8 = named("Q8");
  auto d10 = named("D10");
  Elem three_cycle = 0, q8_four = 0, rot = 0;
  for (Elem x = 0; x < 6; ++x)
    if (s3.elem_order(x) == 3)
      three_cycle = x;
  for (Elem x = 0; x < 8; ++x)
    if (q8.elem_order(x) == 4)
      q8_four = x;
  for (Elem x = 0; x < 10; ++x)
    if (d10.elem_order(x) == 5)
      rot = x;
  CHECK(centralizer(s3, three_cycle).size() == 3);
  CHECK(centralizer(s3, 0).size() == 6);
  CHECK(centralizer(q8, q8_four).size() == 4);
  CHECK(cyclic_normalizer(s3, three_cycle).size() == 6);
  CHECK(cyclic_normalizer(s3, 0).size() == 6);
  CHECK(cyclic_normalizer(d10, rot).size() == 10);
}

TEST_CASE("subgroup_closure") {
  auto s4 = realize(GroupSpec{PermutationSpec{4, {{1, 0, 2, 3}, {1, 2, 3, 0}}}});
  CHECK(subgroup_closure(s4, std::vector<Elem>{0}).size() == 1);
  CHECK(subgroup_closure(s4, s4.generators()).size() == 24);
  auto q8 = named("Q8");
  for (Elem x = 0; x < 8; ++x) {
    if (q8.elem_order(x) == 4)
      CHECK(subgroup_closure(q8, std::vector<Elem>{x}).size() == 4);
  }
  // Closure is closed under products and inverses.
  auto g1 = named("G1");
  auto h = subgroup_closure(g1, std::vector<Elem>{5, 17});
  for (Elem a : h.elements) {
    CHECK(h.contains(g1.inv(a)));
    for (Elem b : h.elements)
      CHECK(h.contains(g1.mul(a, b)));
  }
  CHECK(32 % h.size() == 0);
}

TEST_CASE("commutator_subgroup and solvability") {
  CHECK(commutator_subgroup(realize(make_abelian({6}))).size() == 1);
  CHECK(commutator_subgroup(named("Sym(3)")).size() == 3);
  CHECK(commutator_subgroup(named("Q8")).size() == 2);
  auto f = solvability_flags(realize(make_abelian({6})));
  CHECK((f.is_abelian && f.is_nilpotent && f.is_solvable));
  f = solvability_flags(named("Sym(4)"));
  CHECK((!f.is_abelian && !f.is_nilpotent && f.is_solvable));
  f = solvability_flags(named("Alt(5)"));
  CHECK((!f.is_abelian && !f.is_nilpotent && !f.is_solvable));
  f = solvability_flags(named("G1"));
  CHECK((!f.is_abelian && f.is_nilpotent && f.is_solvable));
}

TEST_CASE("sylow_subgroup") {
  CHECK(sylow_subgroup(named("Sym(4)"), 2).order() == 8);
  auto p3 = sylow_subgroup(named("Sym(3)"), 3);
  CHECK(p3.order() == 3);
  CHECK(p3.exponent() == 3);
  CHECK(sylow_subgroup(named("G1"), 2).order() == 32);
  CHECK_THROWS_AS(sylow_subgroup(named("Sym(3)"), 5), PNotDividing);
  for (const char* id : {"Sym(5)", "Alt(6)", "D20", "Q24"}) {
    auto g = named(id);
    for (std::uint64_t p : prime_divisors(g.order()))
      CHECK(sylow_subgroup(g, p).order() == p_part(g.order(), p));
  }
}

TEST_CASE("index_two_abelian_subgroups") {
  auto q8 = index_two_abelian_subgroups(named("Q8"));
  CHECK(q8.size() == 3);
  for (const auto& h : q8)
    CHECK(h.size() == 4);
  CHECK(index_two_abelian_subgroups(realize(make_metacyclic(7, 3, 7, 2))).empty());
  auto s3 = index_two_abelian_subgroups(named("Sym(3)"));
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].size() == 3);
  // Every index-2 subgroup is normal of index 2; C2 x C2 x C2 has seven.
  auto all = index_two_subgroups(realize(make_abelian({2, 2, 2})));
  CHECK(all.size() == 7);
  for (const auto& h : index_two_subgroups(named("G1"))) {
    CHECK(h.size() == 16);
    CHECK(is_normal(h));
  }
}

TEST_CASE("direct_product") {
  auto c12 = direct_product(realize(make_abelian({3})), realize(make_abelian({4})));
  CHECK(c12.order() == 12);
  CHECK(c12.exponent() == 12);
  auto q8 = named("Q8");
  auto q8c2 = direct_product(q8, realize(make_abelian({2})));
  CHECK(q8c2.order() == 16);
  CHECK(q8c2.exponent() == 4);
  auto triv = direct_product(named("Sym(3)"), realize(make_abelian({1})));
  CHECK(sorted_sizes(conjugacy_classes(triv)) == std::vector<std::uint64_t>{1, 2, 3});
  auto s3q8 = direct_product(named("Sym(3)"), q8);
  CHECK(conjugacy_classes(s3q8).num_classes() == 3 * 5);
  CHECK_THROWS_AS(direct_product(named("Sym(5)"), named("Sym(5)"), 1000), OrderCapExceeded);
}

TEST_CASE("quotient and center") {
  auto q8 = named("Q8");
  auto z = center(q8);
  CHECK(z.size() == 2);
  auto quo = quotient(z);
  CHECK(quo.order() == 4);
  CHECK(quo.exponent() == 2);
  auto s4 = named("Sym(4)");
  auto ab = quotient(commutator_subgroup(s4));
  CHECK(ab.order() == 2);
  check_group_laws(quo);
  check_group_laws(as_group(sylow_subgroup_in(s4, 2)));
}
