#include <doctest.h>

#include <algorithm>
#include <chrono>

#include "cutgroups/char_table.hpp"
#include "cutgroups/errors.hpp"
#include "cutgroups/sym_fastpath.hpp"

using namespace cutgroups;

namespace {

struct Built {
  FiniteGroup g;
  ClassTable t;
  CharacterTable ct;
};

Built build(const GroupSpec& s, std::optional<std::uint64_t> prime = std::nullopt) {
  auto g = realize(s);
  auto t = conjugacy_classes(g);
  auto ct = dixon_table(g, t, prime);
  return {g, t, ct};
}

std::uint32_t class_with_order(const ClassTable& t, std::uint32_t o) {
  for (std::uint32_t k = 0; k < t.num_classes(); ++k)
    if (t.rep_order[k] == o)
      return k;
  return UINT32_MAX;
}

// Frobenius-Schur: sum_chi nu(chi) chi(1) = #{x : x^2 = 1}, with
// nu(chi) = |G|^-1 sum_g chi(g^2) evaluated from the table.
void check_frobenius_schur(const Built& b) {
  const auto e = b.ct.conductor;
  Cyclotomic total(e);
  for (std::size_t chi = 0; chi < b.ct.size(); ++chi) {
    Cyclotomic nu(e);
    for (std::uint32_t k = 0; k < b.t.num_classes(); ++k)
      nu += Cyclotomic::rational(e, Rational(static_cast<std::int64_t>(b.t.sizes[k]))) *
            b.ct.values[chi][b.t.power_class(k, 2)];
    nu = nu * Cyclotomic::rational(e, Rational(1, static_cast<std::int64_t>(b.g.order())));
    REQUIRE(nu.is_rational());
    const auto v = nu.rational_value();
    CHECK((v == Rational(0) || v == Rational(1) || v == Rational(-1)));
    total += nu * Cyclotomic::rational(e, Rational(static_cast<std::int64_t>(b.ct.degrees[chi])));
  }
  std::int64_t involutions = 0;
  for (Elem x = 0; x < b.g.order(); ++x)
    involutions += b.g.mul(x, x) == 0;
  CHECK(total == Cyclotomic::rational(e, Rational(involutions)));
}

// Linear characters are homomorphisms; their number is |G : G'|.
void check_linear_characters(const Built& b) {
  std::size_t linear = 0;
  for (std::size_t chi = 0; chi < b.ct.size(); ++chi) {
    if (b.ct.degrees[chi] != 1)
      continue;
    ++linear;
    for (Elem x = 0; x < b.g.order(); x += 3)
      for (Elem y = 0; y < b.g.order(); y += 5)
        CHECK(b.ct.values[chi][b.t.class_of[b.g.mul(x, y)]] ==
              b.ct.values[chi][b.t.class_of[x]] * b.ct.values[chi][b.t.class_of[y]]);
  }
  CHECK(linear * commutator_subgroup(b.g).size() == b.g.order());
}

std::vector<std::uint64_t> degrees(const CharacterTable& ct) { return ct.degrees; }

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  auto z5 = Cyclotomic::root_of_unity(5, 1);
  Cyclotomic sum(5);
  for (int k = 0; k < 5; ++k)
    sum += Cyclotomic::root_of_unity(5, k);
  CHECK(sum.is_zero());
  CHECK(z5 * z5.conj() == Cyclotomic::rational(5, 1));
  auto r5 = Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4);
  // (z + z^-1)^2 + (z + z^-1) - 1 = 0
  CHECK((r5 * r5 + r5 - Cyclotomic::rational(5, 1)).is_zero());
  auto i4 = Cyclotomic::root_of_unity(4, 1);
  CHECK(i4 * i4 == Cyclotomic::rational(4, -1));
  CHECK(i4.galois(3) == -i4);
  CHECK(Cyclotomic::root_of_unity(24, 7).galois(5) == Cyclotomic::root_of_unity(24, 35));
  CHECK(cyclotomic_field(12).phi == 4);
  CHECK(cyclotomic_field(1).phi == 1);
  CHECK(cyclotomic_field(2).phi == 1);
  CHECK(Cyclotomic::root_of_unity(2, 1) == Cyclotomic::rational(2, -1));
  CHECK(cyclotomic_field(105).cyclotomic_poly[7] == -2);  // famous coefficient of Phi_105
}

TEST_CASE("class_constants") {
  auto s3 = realize(make_named("Sym(3)"));
  auto t = conjugacy_classes(s3);
  auto a = class_constants(s3, t);
  auto tr = class_with_order(t, 2);
  CHECK(a[tr][tr][0] == 3);
  // With the identity class only u = 1 contributes, so v = rep_k.
  for (std::size_t j = 0; j < t.num_classes(); ++j)
    for (std::size_t k = 0; k < t.num_classes(); ++k)
      CHECK(a[0][j][k] == (j == k ? 1u : 0u));
  auto q8 = realize(make_named("Q8"));
  auto tq = conjugacy_classes(q8);
  auto aq = class_constants(q8, tq);
  CHECK(aq[class_with_order(tq, 2)][class_with_order(tq, 2)][0] == 1);
  // Counting identity: sum_k a[i][j][k] |C_k| = |C_i| |C_j|.
  auto g1 = realize(make_named("G1"));
  auto t1 = conjugacy_classes(g1);
  auto a1 = class_constants(g1, t1);
  for (std::size_t i = 0; i < t1.num_classes(); ++i)
    for (std::size_t j = 0; j < t1.num_classes(); ++j) {
      Count s = 0;
      for (std::size_t k = 0; k < t1.num_classes(); ++k)
        s += a1[i][j][k] * t1.sizes[k];
      CHECK(s == t1.sizes[i] * t1.sizes[j]);
    }
}

TEST_CASE("dixon_table: examples") {
  auto s3 = build(make_named("Sym(3)"));
  CHECK(degrees(s3.ct) == std::vector<std::uint64_t>{1, 1, 2});
  for (const auto& row : s3.ct.values)
    for (const auto& v : row)
      CHECK(v.is_rational());
  CHECK(degrees(build(make_named("Q8")).ct) == std::vector<std::uint64_t>{1, 1, 1, 1, 2});
  auto c7 = build(make_abelian({7}));
  CHECK(c7.ct.size() == 7);
  for (std::size_t chi = 0; chi < 7; ++chi)
    for (std::size_t k = 0; k < 7; ++k) {
      auto v = c7.ct.values[chi][k];
      auto p = v;
      for (int i = 1; i < 7; ++i)
        p = p * v;
      CHECK(p == Cyclotomic::rational(7, 1));
    }
  CHECK(degrees(build(make_named("Alt(5)")).ct) == std::vector<std::uint64_t>{1, 3, 3, 4, 5});
  CHECK(degrees(build(make_named("Sym(4)")).ct) == std::vector<std::uint64_t>{1, 1, 2, 3, 3});
}

TEST_CASE("dixon_table: independent cross-checks") {
  for (auto spec : {make_named("Sym(3)"), make_named("Q8"), make_named("G1"), make_named("G2"), make_named("Alt(5)"),
                    make_named("Sym(5)"), make_metacyclic(7, 3, 7, 2), make_metacyclic(13, 6, 13, 4),
                    make_metacyclic(28, 6, 14, 3), make_abelian({2, 12}), make_named("Q16"), make_named("D20"),
                    make_product({make_named("Q8"), make_abelian({3})})}) {
    auto b = build(spec);
    CAPTURE(render_spec(spec));
    CHECK(orthogonality_holds(b.ct));
    check_frobenius_schur(b);
    check_linear_characters(b);
    CHECK(char_field_counts(b.ct).real == class_field_counts(b.t).real);
  }
}

TEST_CASE("dixon_table: prime policy") {
  CHECK(default_dixon_prime(6, 6) == 7);
  CHECK(default_dixon_prime(60, 30) == 31);
  CHECK(default_dixon_prime(1, 1) == 3);
  auto g = realize(make_named("Sym(3)"));
  auto t = conjugacy_classes(g);
  CHECK_THROWS_AS(dixon_table(g, t, 11), NoSuitablePrime);  // 11 != 1 mod 6
  CHECK_THROWS_AS(dixon_table(g, t, 5), NoSuitablePrime);
  auto other = dixon_table(g, t, 13);
  CHECK(other.prime == 13);
  CHECK(other.values == dixon_table(g, t).values);
  CHECK_THROWS_AS(dixon_table(realize(make_abelian({1})), alt_class_table(5)), NotApplicable);
}

TEST_CASE("dixon_table: independent of the prime") {
  for (auto spec : {make_named("G1"), make_named("G2"), make_metacyclic(21, 6, 21, 5), make_named("Q24"),
                    make_abelian({3, 4}), make_named("Sym(4)")}) {
    auto g = realize(spec);
    auto t = conjugacy_classes(g);
    const auto p1 = default_dixon_prime(g.order(), g.exponent());
    const auto p2 = next_dixon_prime(g.order(), g.exponent(), p1);
    auto a = dixon_table(g, t);
    auto b = dixon_table(g, t, p2);
    CHECK(a.prime == p1);
    CHECK(b.prime == p2);
    CHECK(a.degrees == b.degrees);
    CHECK(a.values == b.values);
  }
}

TEST_CASE("character fields") {
  auto a5 = build(make_named("Alt(5)"));
  for (std::size_t chi = 0; chi < a5.ct.size(); ++chi) {
    if (a5.ct.degrees[chi] == 3) {
      auto h = char_stabilizer(a5.ct, chi);
      CHECK(h.index() == 2);
      CHECK(h.contains(a5.ct.conductor - 1));
      CHECK(char_field(a5.ct, chi) == FieldId::quadratic(5));
    }
  }
  CHECK(group_field(a5.ct).degree == 2);
  CHECK(group_field(a5.ct).field == FieldId::quadratic(5));
  auto s4 = build(make_named("Sym(4)"));
  for (std::size_t chi = 0; chi < s4.ct.size(); ++chi) {
    CHECK(char_field(s4.ct, chi) == FieldId::rationals());
    CHECK(char_stabilizer(s4.ct, chi) == full_unit_group(s4.ct.conductor));
  }
  CHECK(group_field(s4.ct).degree == 1);
  auto c3 = build(make_abelian({3}));
  int faithful = 0;
  for (std::size_t chi = 0; chi < 3; ++chi) {
    if (char_is_real(c3.ct, chi))
      continue;
    ++faithful;
    CHECK(char_stabilizer(c3.ct, chi) == UnitSubgroup{3, {1}});
  }
  CHECK(faithful == 2);
  auto c4 = build(make_abelian({4}));
  int quartic = 0;
  for (std::size_t chi = 0; chi < 4; ++chi) {
    if (!char_is_real(c4.ct, chi)) {
      ++quartic;
      CHECK(char_field(c4.ct, chi) == FieldId::quadratic(-1));
    }
  }
  CHECK(quartic == 2);
  CHECK(group_field(build(make_abelian({12})).ct).degree == 4);
}

TEST_CASE("char_field degree equals the Galois orbit size") {
  for (auto spec : {make_named("G1"), make_named("G2"), make_metacyclic(13, 6, 13, 4), make_abelian({12})}) {
    auto b = build(spec);
    for (std::size_t chi = 0; chi < b.ct.size(); ++chi) {
      std::vector<std::vector<Cyclotomic>> orbit;
      for (std::uint64_t j : unit_residues(b.ct.conductor)) {
        std::vector<Cyclotomic> row;
        for (std::uint32_t k = 0; k < b.t.num_classes(); ++k)
          row.push_back(b.ct.values[chi][b.t.power_class(k, static_cast<std::int64_t>(j))]);
        if (std::find(orbit.begin(), orbit.end(), row) == orbit.end())
          orbit.push_back(row);
        // The Galois action on values agrees with the power-map action.
        std::vector<Cyclotomic> direct;
        for (const auto& v : b.ct.values[chi])
          direct.push_back(v.galois(static_cast<std::int64_t>(j)));
        CHECK(direct == row);
      }
      CHECK(orbit.size() == char_field(b.ct, chi).degree);
    }
  }
}

TEST_CASE("field_counts: examples") {
  auto g1 = build(make_named("G1"));
  auto c1 = field_counts(g1.ct, g1.t);
  CHECK(c1.chars.rational == 10);
  CHECK(c1.classes.rational == 8);
  CHECK(c1.classes.quadratic == 6);
  CHECK(c1.chars.quadratic == 0);
  auto g2 = build(make_named("G2"));
  auto c2 = field_counts(g2.ct, g2.t);
  CHECK(c2.chars.rational == 6);
  CHECK(c2.classes.rational == 8);
  CHECK(c2.classes.quadratic == 2);
  CHECK(c2.chars.quadratic == 8);
  for (auto inv : {std::vector<std::uint64_t>{24}, {2, 6}, {3, 9}, {5}, {2, 2, 4}}) {
    auto b = build(make_abelian(inv));
    auto c = field_counts(b.ct, b.t);
    CHECK(c.chars == c.classes);
  }
}

TEST_CASE("dixon_table: larger permutation groups") {
  auto start = std::chrono::steady_clock::now();
  for (const char* id : {"Alt(7)", "Sym(6)"}) {
    auto b = build(make_named(id));
    CHECK(b.ct.size() == b.t.num_classes());
  }
  auto a7 = build(make_named("Alt(7)"));
  CHECK(degrees(a7.ct) == std::vector<std::uint64_t>{1, 6, 10, 10, 14, 14, 15, 21, 35});
  MESSAGE("elapsed ms: " << std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start).count());
}
