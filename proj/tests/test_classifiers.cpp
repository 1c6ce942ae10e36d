#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cutgroups/classifiers.hpp"
#include "cutgroups/errors.hpp"
#include "cutgroups/sym_fastpath.hpp"

using namespace cutgroups;

namespace {

FiniteGroup named(const char* id) { return realize(make_named(id)); }
FiniteGroup meta(std::uint64_t n, std::uint64_t t, std::uint64_t l, std::uint64_t r) {
  return realize(make_metacyclic(n, t, l, r));
}

// Brute-force oracle: class ids from explicit conjugation.
std::vector<std::uint32_t> brute_class_ids(const FiniteGroup& g) {
  std::vector<std::uint32_t> id(g.order(), UINT32_MAX);
  std::uint32_t next = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    if (id[x] != UINT32_MAX)
      continue;
    for (Elem y = 0; y < g.order(); ++y)
      id[g.conj(x, y)] = next;
    ++next;
  }
  return id;
}

// Every generator of <x> lies in C_x or C_{x^m}, for every x.
bool brute_m_semirational(const FiniteGroup& g, const std::vector<std::uint32_t>& cls, std::int64_t m) {
  for (Elem x = 0; x < g.order(); ++x) {
    const std::uint32_t o = g.elem_order(x);
    for (std::uint32_t j = 1; j <= o; ++j) {
      if (std::gcd(j, o) != 1)
        continue;
      const std::uint32_t c = cls[g.pow(x, j)];
      if (c != cls[x] && c != cls[g.pow(x, m)])
        return false;
    }
  }
  return true;
}

bool brute_cut(const FiniteGroup& g, const std::vector<std::uint32_t>& cls) {
  for (Elem x = 0; x < g.order(); ++x) {
    const std::uint32_t o = g.elem_order(x);
    for (std::uint32_t j = 1; j <= o; ++j) {
      if (std::gcd(j, o) == 1 && cls[g.pow(x, j)] != cls[x] && cls[g.pow(x, j)] != cls[g.inv(x)])
        return false;
    }
  }
  return true;
}

std::vector<FiniteGroup> oracle_groups() {
  std::vector<FiniteGroup> gs;
  for (const char* id : {"D6", "D8", "D10", "D12", "Q8", "Q12", "Q16", "G1", "G2", "Sym(3)", "Sym(4)", "Alt(4)", "Alt(5)"})
    gs.push_back(named(id));
  gs.push_back(meta(7, 3, 7, 2));
  gs.push_back(meta(8, 4, 4, 3));
  gs.push_back(meta(13, 6, 13, 4));
  gs.push_back(meta(8, 2, 8, 3));
  gs.push_back(realize(make_abelian({12})));
  gs.push_back(realize(make_abelian({2, 6})));
  gs.push_back(realize(make_abelian({5})));
  return gs;
}

}  // namespace

TEST_CASE("element_rationality: examples") {
  const auto d10 = named("D10");
  const auto t = conjugacy_classes(d10);
  bool seen_rotation = false;
  for (std::uint32_t k = 0; k < t.num_classes(); ++k) {
    const auto er = element_rationality(t, k);
    CHECK((!er.rational || er.inverse_semirational));
    CHECK((!er.inverse_semirational || er.semirational));
    if (er.order <= 4 || er.order == 6)
      CHECK(er.inverse_semirational);
    if (er.order == 5) {
      seen_rotation = true;
      CHECK(er.semirational);
      CHECK_FALSE(er.inverse_semirational);
      CHECK(er.partners == std::vector<std::uint32_t>{2, 3});
      CHECK(er.field == FieldId::quadratic(5));
    }
  }
  CHECK(seen_rotation);

  const auto a7 = named("Alt(7)");
  const auto ta = conjugacy_classes(a7);
  std::size_t seven_cycles = 0;
  for (std::uint32_t k = 0; k < ta.num_classes(); ++k) {
    if (ta.rep_order[k] != 7)
      continue;
    ++seven_cycles;
    const auto er = element_rationality(ta, k);
    CHECK(er.stabilizer.residues == std::vector<std::uint64_t>{1, 2, 4});
    CHECK(er.inverse_semirational);
    CHECK_FALSE(er.rational);
  }
  CHECK(seven_cycles == 2);
}

TEST_CASE("usr_values: examples") {
  const auto d10 = conjugacy_classes(named("D10"));
  const auto u = usr_values(d10);
  CHECK(u.period == 5);
  CHECK(u.lift(10) == std::vector<std::uint64_t>{2, 3, 7, 8});
  CHECK(u.contains(2));

  const auto s4 = conjugacy_classes(named("Sym(4)"));
  const auto us = usr_values(s4);
  CHECK(us.period == 1);
  CHECK(us.lift(s4.exponent).size() == s4.exponent);

  const auto m = conjugacy_classes(meta(8, 4, 4, 3));
  CHECK(usr_values(m).empty());
  // Semi-rational but not quadratic rational: inducing the character of <a, b^2>
  // with a -> zeta_8, b^2 -> i gives values sqrt(-2) and 2i.
  const auto rep = classify(meta(8, 4, 4, 3));
  CHECK(rep.flags.semirational);
  CHECK(rep.flags.quadratic_rational == false);
  CHECK_FALSE(rep.flags.usr);
  CHECK(rep.group_field_degree == 4);
}

TEST_CASE("usr_values and the cut flag agree with brute-force oracles") {
  for (const auto& g : oracle_groups()) {
    const auto cls = brute_class_ids(g);
    const auto t = conjugacy_classes(g);
    const auto u = usr_values(t);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t m = 0; m < g.exponent(); ++m) {
      if (brute_m_semirational(g, cls, static_cast<std::int64_t>(m)))
        expected.push_back(m);
    }
    CAPTURE(g.order());
    CHECK(u.lift(g.exponent()) == expected);
    REQUIRE(u.residues.has_value());
    CHECK(u.residues->size() == u.count);
    const auto rep = classify(g);
    CHECK(rep.flags.cut == brute_cut(g, cls));
    CHECK(rep.all_valid());
  }
}

TEST_CASE("classify: examples") {
  const auto c12 = classify(realize(make_abelian({12})));
  CHECK_FALSE(c12.flags.cut);
  CHECK(c12.rho == 1);

  const auto q8 = classify(named("Q8"));
  CHECK(q8.flags.cut);
  CHECK(q8.q_star);
  CHECK(q8.central_height == 2);

  const auto a5 = classify(named("Alt(5)"));
  CHECK_FALSE(a5.flags.cut);
  CHECK(a5.flags.semirational);
  CHECK(a5.flags.usr);
  CHECK(a5.flags.quadratic_rational == true);
  CHECK(a5.flags.qsr == true);
  CHECK(a5.rho == 1);
  CHECK(a5.group_field == FieldId::quadratic(5));

  const auto g1 = classify(named("G1"));
  CHECK(g1.flags.semirational);
  CHECK(g1.flags.quadratic_rational == false);
  const auto g2 = classify(named("G2"));
  CHECK_FALSE(g2.flags.semirational);
  CHECK(g2.flags.quadratic_rational == true);

  const auto d10 = classify(named("D10"));
  CHECK(d10.flags.usr);
  CHECK_FALSE(d10.flags.cut);

  const auto c4 = classify(realize(make_abelian({4})));
  CHECK(c4.flags.cut);
  CHECK_FALSE(c4.flags.rational);

  for (const auto* r : {&c12, &q8, &a5, &g1, &g2, &d10, &c4})
    CHECK(r->all_valid());
}

TEST_CASE("rank_rho: examples") {
  CHECK(rank_rho(conjugacy_classes(named("Alt(5)"))) == 1);
  CHECK(rank_rho(conjugacy_classes(realize(make_abelian({12})))) == 1);
  for (const char* id : {"Q8", "D8", "Sym(4)", "Alt(4)"})
    CHECK(rank_rho(conjugacy_classes(named(id))) == 0);
  CHECK(rank_rho(conjugacy_classes(realize(make_abelian({5})))) == 1);
  CHECK(rank_rho(conjugacy_classes(realize(make_abelian({7})))) == 2);
}

TEST_CASE("q_star and central height") {
  CHECK(q_star_detect(named("Q8")));
  CHECK(q_star_detect(named("Q16")));
  CHECK_FALSE(q_star_detect(named("Sym(3)")));
  CHECK_FALSE(q_star_detect(named("D8")));
  CHECK_FALSE(q_star_detect(realize(make_abelian({2, 2}))));

  const auto s3 = classify(named("Sym(3)"));
  CHECK(s3.flags.cut);
  CHECK(s3.central_height == 0);
  const auto d8 = classify(named("D8"));
  CHECK(d8.flags.cut);
  CHECK(d8.central_height == 1);
  CHECK(central_height(true, true, 2) == 2);
}

TEST_CASE("fast_cut_checks") {
  const auto f1 = fast_cut_checks(meta(7, 3, 7, 2));
  REQUIRE(f1.odd_order.has_value());
  CHECK(*f1.odd_order);
  CHECK_FALSE(f1.two_group.has_value());

  const auto f2 = fast_cut_checks(named("Q8"));
  REQUIRE(f2.two_group.has_value());
  CHECK(*f2.two_group);

  const auto f3 = fast_cut_checks(realize(make_abelian({9})));
  REQUIRE(f3.three_group.has_value());
  CHECK_FALSE(*f3.three_group);
  CHECK(f3.odd_order == false);

  CHECK(fast_cut_checks(realize(make_abelian({3, 3}))).three_group == true);
  CHECK(fast_cut_checks(realize(make_abelian({8}))).two_group == false);
  // Fields Q(sqrt(-7)) and Q(sqrt(-3)) differ, and there is an element of order 21.
  const auto prod = realize(make_product({make_metacyclic(7, 3, 7, 2), make_abelian({3})}));
  CHECK(fast_cut_checks(prod).odd_order == false);
  CHECK_FALSE(classify(prod).flags.cut);
  CHECK_THROWS_AS(fast_cut_checks(named("Sym(3)")), NotApplicable);
}

TEST_CASE("fast_cut_checks agree with the class criterion") {
  std::vector<FiniteGroup> gs = {named("Q8"), named("D8"), named("Q16"), named("D16"), named("G1"), named("G2"),
                                 meta(7, 3, 7, 2), meta(9, 3, 9, 4), meta(13, 3, 13, 3),
                                 realize(make_abelian({3, 9})), realize(make_abelian({2, 4, 8})),
                                 realize(make_product({make_metacyclic(7, 3, 7, 2), make_abelian({3})}))};
  for (const auto& g : gs) {
    const auto t = conjugacy_classes(g);
    const auto fast = fast_cut_checks(t);
    const bool cut = classify(g).flags.cut;
    for (const auto& v : {fast.odd_order, fast.two_group, fast.three_group}) {
      if (v)
        CHECK(*v == cut);
    }
  }
}

TEST_CASE("class_group_field agrees with the character group field") {
  for (const auto& g : oracle_groups()) {
    const auto t = conjugacy_classes(g);
    const auto ct = dixon_table(g, t);
    const auto cgf = class_group_field(t);
    const auto gf = group_field(ct);
    CHECK(cgf.degree == gf.degree);
    CHECK(cgf.field == gf.field);
    CHECK(cgf.degree == class_field_units(t).index());
  }
}

TEST_CASE("classify_virtual on large alternating tables") {
  const StructureFlags simple{false, false, false};
  const auto a12 = classify_virtual(alt_class_table(12), simple);
  CHECK(a12.flags.cut);
  CHECK_FALSE(a12.flags.quadratic_rational.has_value());
  CHECK_FALSE(a12.q_star);
  CHECK(a12.all_valid());
  const auto a16 = classify_virtual(alt_class_table(16), simple);
  CHECK_FALSE(a16.flags.usr);
  CHECK(a16.flags.semirational);
  const auto a13 = classify_virtual(alt_class_table(13), simple);
  CHECK_FALSE(a13.flags.cut);
  CHECK(a13.flags.usr);
  CHECK(a13.all_valid());
}

TEST_CASE("abelian groups: cut iff exponent divides 4 or 6, and all classes coincide") {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    const auto rep = classify(realize(make_abelian({n})));
    const bool small = n == 1 || n == 2 || n == 3 || n == 4 || n == 6;
    CAPTURE(n);
    CHECK(rep.flags.cut == small);
    CHECK(rep.flags.semirational == small);
    CHECK(rep.flags.usr == small);
    CHECK(rep.flags.quadratic_rational == small);
    CHECK(rep.all_valid());
  }
}
