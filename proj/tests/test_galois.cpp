#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include "cutgroups/errors.hpp"
#include "cutgroups/galois.hpp"
#include "cutgroups/sym_fastpath.hpp"

using namespace cutgroups;

namespace {

ClassTable table_of(const GroupSpec& s) { return conjugacy_classes(realize(s)); }

std::uint32_t class_with_order(const ClassTable& t, std::uint32_t o) {
  for (std::uint32_t k = 0; k < t.num_classes(); ++k)
    if (t.rep_order[k] == o)
      return k;
  FAIL("no class of order " << o);
  return 0;
}

// Legendre symbol by Euler's criterion.
int legendre_oracle(std::int64_t a, std::uint64_t p) {
  std::uint64_t r = pow_mod(mod_floor(a, p), (p - 1) / 2, p);
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

// (D | p) for odd p not dividing D counts roots of x^2 - D mod p minus one.
int root_count_oracle(std::int64_t d, std::uint64_t p) {
  int roots = 0;
  for (std::uint64_t x = 0; x < p; ++x)
    roots += mul_mod(x, x, p) == mod_floor(d, p);
  return roots - 1;
}

std::int64_t squarefree_part(std::int64_t v) {
  std::int64_t sign = v < 0 ? -1 : 1;
  std::int64_t a = std::llabs(v), out = 1;
  for (std::int64_t p = 2; p * p <= a; ++p) {
    while (a % (p * p) == 0)
      a /= p * p;
    if (a % p == 0) {
      out *= p;
      a /= p;
    }
  }
  return sign * out * a;
}

// Quadratic subfield fixed by h, found numerically: (eta - eta')^2 for
// Gaussian-type periods of a generic element of Q(zeta_m) is an integer
// whose squarefree part is d.
std::int64_t period_oracle(const UnitSubgroup& h) {
  const std::uint64_t m = h.modulus;
  auto sigma = [m](std::uint64_t j) {
    std::complex<double> z = 0;
    for (std::uint64_t i = 0; i < m; ++i)
      z += static_cast<double>(i * i + 1) *
           std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i * j % m) / static_cast<double>(m));
    return z;
  };
  std::complex<double> eta = 0, eta2 = 0;
  for (std::uint64_t j : unit_residues(m))
    (h.contains(j) ? eta : eta2) += sigma(j);
  std::complex<double> sq = (eta - eta2) * (eta - eta2);
  REQUIRE(std::abs(sq.imag()) < 1e-6);
  auto v = static_cast<std::int64_t>(std::llround(sq.real()));
  REQUIRE(std::abs(sq.real() - static_cast<double>(v)) < 1e-6);
  REQUIRE(v != 0);
  return squarefree_part(v);
}

// Every index-2 subgroup of (Z/m)^x, as kernels of order-2 characters.
std::vector<UnitSubgroup> index_two_unit_subgroups(std::uint64_t m) {
  auto units = unit_residues(m);
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<UnitSubgroup> out;
  // Closures of all subgroups generated by up to three units; keep index 2.
  for (std::size_t a = 0; a < units.size(); ++a)
    for (std::size_t b = a; b < units.size(); ++b)
      for (std::size_t c = b; c < units.size(); ++c) {
        auto h = generated_units(m, {units[a], units[b], units[c]});
        if (h.index() == 2 && seen.insert(h.residues).second)
          out.push_back(h);
      }
  return out;
}

}  // namespace

TEST_CASE("kronecker_symbol: examples") {
  CHECK(kronecker_symbol(5, 4) == 1);
  for (std::int64_t d : {-7, -3, 1, 2, 5, 12})
    CHECK(kronecker_symbol(d, 1) == 1);
  CHECK(kronecker_symbol(-3, 2) == -1);
  CHECK(kronecker_symbol(5, 2) == -1);
  CHECK(kronecker_symbol(-7, 2) == 1);
  CHECK(kronecker_symbol(8, 2) == 0);
  CHECK(kronecker_symbol(1, 0) == 1);
  CHECK(kronecker_symbol(2, 0) == 0);
}

TEST_CASE("kronecker_symbol: agrees with independent oracles at odd primes") {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL}) {
    for (std::int64_t d = -40; d <= 40; ++d) {
      CHECK(kronecker_symbol(d, static_cast<std::int64_t>(p)) == legendre_oracle(d, p));
      if (d % static_cast<std::int64_t>(p) != 0)
        CHECK(kronecker_symbol(d, static_cast<std::int64_t>(p)) == root_count_oracle(d, p));
    }
  }
}

TEST_CASE("kronecker_symbol: multiplicative in the lower argument") {
  for (std::int64_t d : {-24, -15, -8, -7, -4, -3, 5, 8, 12, 13, 21})
    for (std::int64_t a = 1; a < 30; ++a)
      for (std::int64_t b = 1; b < 30; ++b)
        CHECK(kronecker_symbol(d, a * b) == kronecker_symbol(d, a) * kronecker_symbol(d, b));
}

TEST_CASE("fixed_field_id: examples") {
  CHECK(fixed_field_id({5, {1, 4}}) == FieldId::quadratic(5));
  CHECK(fixed_field_id(full_unit_group(12)) == FieldId::rationals());
  CHECK(fixed_field_id({3, {1}}) == FieldId::quadratic(-3));
  CHECK(fixed_field_id({7, {1, 2, 4}}) == FieldId::quadratic(-7));
  CHECK(fixed_field_id({1, {0}}) == FieldId::rationals());
  CHECK(fixed_field_id({12, {1}}) == FieldId::higher(4));
}

TEST_CASE("fixed_field_id: golden quadratic subfields of cyclotomic fields") {
  for (std::uint64_t m : {3ULL, 4ULL, 5ULL, 7ULL, 8ULL, 12ULL, 24ULL}) {
    auto subs = index_two_unit_subgroups(m);
    std::set<std::int64_t> ds;
    for (const auto& h : subs) {
      auto f = fixed_field_id(h);
      REQUIRE(f.kind == FieldId::Kind::Quadratic);
      CHECK(f.d == period_oracle(h));
      CHECK((f.d < 0) == !h.contains(m - 1));
      ds.insert(f.d);
    }
    CHECK(ds.size() == subs.size());
  }
  // The seven quadratic subfields of Q(zeta_24).
  std::set<std::int64_t> ds;
  for (const auto& h : index_two_unit_subgroups(24))
    ds.insert(fixed_field_id(h).d);
  CHECK(ds == std::set<std::int64_t>{-6, -3, -2, -1, 2, 3, 6});
}

TEST_CASE("stabilizer_units and element_field") {
  auto d10 = table_of(make_named("D10"));
  auto k5 = class_with_order(d10, 5);
  CHECK(stabilizer_units(d10, k5) == UnitSubgroup{5, {1, 4}});
  CHECK(element_field(d10, k5) == FieldId::quadratic(5));
  auto s4 = table_of(make_named("Sym(4)"));
  auto k2 = class_with_order(s4, 2);
  CHECK(stabilizer_units(s4, k2) == full_unit_group(2));
  CHECK(stabilizer_units(s4, 0) == UnitSubgroup{1, {0}});
  auto f21 = table_of(make_metacyclic(7, 3, 7, 2));
  auto k7 = class_with_order(f21, 7);
  CHECK(stabilizer_units(f21, k7) == UnitSubgroup{7, {1, 2, 4}});
  CHECK(element_field(f21, k7) == FieldId::quadratic(-7));
  auto s5 = table_of(make_named("Sym(5)"));
  for (std::uint32_t k = 0; k < s5.num_classes(); ++k)
    CHECK(element_field(s5, k) == FieldId::rationals());
}

TEST_CASE("class partitions: examples") {
  auto a5 = alt_class_table(5);
  CHECK(r_class_partition(a5).num_blocks == 5);
  CHECK(q_class_partition(a5).num_blocks == 4);
  auto v4 = table_of(make_abelian({2, 2, 2}));
  CHECK(r_class_partition(v4).num_blocks == 8);
  CHECK(q_class_partition(v4).num_blocks == 8);
  auto c12 = table_of(make_abelian({12}));
  CHECK(r_class_partition(c12).num_blocks == 7);
  CHECK(q_class_partition(c12).num_blocks == 6);
}

TEST_CASE("class partitions and stabilizers: invariants") {
  std::vector<ClassTable> tables{table_of(make_named("G1")), table_of(make_named("G2")),
                                 table_of(make_metacyclic(13, 6, 13, 4)), table_of(make_abelian({3, 12})),
                                 table_of(make_named("Q16")), alt_class_table(7), alt_class_table(13),
                                 sym_class_table(9)};
  for (const auto& t : tables) {
    auto q = q_class_partition(t);
    auto r = r_class_partition(t);
    auto q4 = q_class_partition(t, PowerRange::GroupOrder);
    CHECK(q4.block_of == q.block_of);
    auto qb = q.blocks();
    for (std::uint32_t k = 0; k < t.num_classes(); ++k) {
      auto h = stabilizer_units(t, k);
      auto f = element_field(t, k);
      CHECK(f.degree * h.size() == euler_phi(t.rep_order[k]));
      CHECK(qb[q.block_of[k]].size() == h.index());
      const bool real = t.inverse_class[k] == k;
      CHECK(h.contains(t.rep_order[k] - 1) == real);
      if (f.kind == FieldId::Kind::Quadratic)
        CHECK((f.d > 0) == real);
      // R-blocks refine Q-blocks.
      CHECK(q.block_of[t.inverse_class[k]] == q.block_of[k]);
    }
    CHECK(r.num_blocks >= q.num_blocks);
  }
}

TEST_CASE("class_field_units") {
  CHECK(fixed_field_id(class_field_units(alt_class_table(5))) == FieldId::quadratic(5));
  CHECK(fixed_field_id(class_field_units(table_of(make_abelian({12})))).degree == 4);
  CHECK(fixed_field_id(class_field_units(table_of(make_named("Sym(4)")))) == FieldId::rationals());
}
