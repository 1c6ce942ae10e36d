#include "cutgroups/galois.hpp"

#include <algorithm>
#include <numeric>

#include "cutgroups/errors.hpp"

namespace cutgroups {

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
};

GaloisPartition finish(UnionFind& uf) {
  GaloisPartition p;
  const std::size_t n = uf.parent.size();
  p.block_of.resize(n);
  std::vector<std::uint32_t> id(n, UINT32_MAX);
  for (std::uint32_t k = 0; k < n; ++k) {
    std::uint32_t r = uf.find(k);
    if (id[r] == UINT32_MAX)
      id[r] = static_cast<std::uint32_t>(p.num_blocks++);
    p.block_of[k] = id[r];
  }
  return p;
}

} // namespace

bool UnitSubgroup::contains(std::uint64_t j) const {
  return std::binary_search(residues.begin(), residues.end(), j % modulus);
}

std::uint64_t UnitSubgroup::index() const { return euler_phi(modulus) / residues.size(); }

UnitSubgroup full_unit_group(std::uint64_t m) { return {m, unit_residues(m)}; }

UnitSubgroup generated_units(std::uint64_t m, const std::vector<std::uint64_t>& gens) {
  if (m == 1)
    return {1, {0}};
  std::vector<char> member(m, 0);
  std::vector<std::uint64_t> elems{1};
  member[1] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::uint64_t g : gens) {
      std::uint64_t y = mul_mod(elems[head], g % m, m);
      if (!member[y]) {
        member[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return {m, elems};
}

UnitSubgroup intersect(const UnitSubgroup& a, const UnitSubgroup& b) {
  if (a.modulus != b.modulus)
    throw Error("intersect: moduli differ");
  UnitSubgroup out{a.modulus, {}};
  std::set_intersection(a.residues.begin(), a.residues.end(), b.residues.begin(), b.residues.end(),
                        std::back_inserter(out.residues));
  return out;
}

std::string FieldId::str() const {
  switch (kind) {
    case Kind::Rationals:
      return "Q";
    case Kind::Quadratic:
      return "Q(sqrt(" + std::to_string(d) + "))";
    case Kind::HigherDegree:
      return "degree " + std::to_string(degree);
  }
  return "?";
}

int kronecker_symbol(std::int64_t a, std::int64_t b) {
  static constexpr int kTab[8] = {0, 1, 0, -1, 0, -1, 0, 1};
  if (b == 0)
    return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && b % 2 == 0)
    return 0;
  int v = 0;
  while (b % 2 == 0) {
    b /= 2;
    ++v;
  }
  int k = (v % 2 == 0) ? 1 : kTab[a & 7];
  if (b < 0) {
    b = -b;
    if (a < 0)
      k = -k;
  }
  std::int64_t x = static_cast<std::int64_t>(mod_floor(a, static_cast<std::uint64_t>(b)));
  std::int64_t y = b;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      if ((y & 7) == 3 || (y & 7) == 5)
        k = -k;
    }
    std::swap(x, y);
    if ((x & 3) == 3 && (y & 3) == 3)
      k = -k;
    x %= y;
  }
  return y == 1 ? k : 0;
}

std::int64_t quadratic_discriminant(std::int64_t d) { return mod_floor(d, 4) == 1 ? d : 4 * d; }

FieldId fixed_field_id(const UnitSubgroup& h) {
  const std::uint64_t idx = h.index();
  if (idx == 1)
    return FieldId::rationals();
  if (idx > 2)
    return FieldId::higher(idx);
  const auto m = static_cast<std::int64_t>(h.modulus);
  std::vector<std::int64_t> found;
  for (std::int64_t a = 1; a <= m; ++a) {
    for (std::int64_t d : {a, -a}) {
      if (d == 1 || !is_squarefree(d))
        continue;
      std::int64_t disc = quadratic_discriminant(d);
      if (m % std::abs(disc) != 0)
        continue;
      bool trivial = std::all_of(h.residues.begin(), h.residues.end(), [disc](std::uint64_t j) {
        return kronecker_symbol(disc, static_cast<std::int64_t>(j)) == 1;
      });
      if (trivial)
        found.push_back(d);
    }
  }
  if (found.size() != 1)
    throw NoQuadraticFound("index-2 unit subgroup mod " + std::to_string(m) + " matched " +
                           std::to_string(found.size()) + " quadratic fields");
  return FieldId::quadratic(found.front());
}

UnitSubgroup stabilizer_units(const ClassTable& t, std::uint32_t k) {
  const std::uint64_t o = t.rep_order[k];
  UnitSubgroup h{o, {}};
  for (std::uint64_t j : unit_residues(o)) {
    if (t.power_class(k, static_cast<std::int64_t>(j)) == k)
      h.residues.push_back(j);
  }
  return h;
}

FieldId element_field(const ClassTable& t, std::uint32_t k) { return fixed_field_id(stabilizer_units(t, k)); }

std::vector<std::vector<std::uint32_t>> GaloisPartition::blocks() const {
  std::vector<std::vector<std::uint32_t>> out(num_blocks);
  for (std::uint32_t k = 0; k < block_of.size(); ++k)
    out[block_of[k]].push_back(k);
  return out;
}

GaloisPartition q_class_partition(const ClassTable& t, PowerRange range) {
  UnionFind uf(t.num_classes());
  if (range == PowerRange::ElementOrder) {
    for (std::uint32_t k = 0; k < t.num_classes(); ++k) {
      for (std::uint64_t j : unit_residues(t.rep_order[k]))
        uf.unite(k, t.power_class(k, static_cast<std::int64_t>(j)));
    }
  } else {
    // Residues of j coprime to |G|; beyond 2^20 the exponent carries the same primes.
    const std::uint64_t bound = t.group_order <= (Count{1} << 20) ? static_cast<std::uint64_t>(t.group_order)
                                                                   : t.exponent;
    const auto primes = prime_divisors(t.group_order);
    for (std::uint64_t j = 1; j <= bound; ++j) {
      bool coprime = std::none_of(primes.begin(), primes.end(), [j](std::uint64_t p) { return j % p == 0; });
      if (!coprime)
        continue;
      for (std::uint32_t k = 0; k < t.num_classes(); ++k)
        uf.unite(k, t.power_class(k, static_cast<std::int64_t>(j)));
    }
  }
  return finish(uf);
}

GaloisPartition r_class_partition(const ClassTable& t) {
  UnionFind uf(t.num_classes());
  for (std::uint32_t k = 0; k < t.num_classes(); ++k)
    uf.unite(k, t.inverse_class[k]);
  return finish(uf);
}

UnitSubgroup class_field_units(const ClassTable& t) {
  UnitSubgroup h{t.exponent, {}};
  for (std::uint64_t j : unit_residues(t.exponent)) {
    bool fixes_all = true;
    for (std::uint32_t k = 0; k < t.num_classes() && fixes_all; ++k)
      fixes_all = t.power_class(k, static_cast<std::int64_t>(j)) == k;
    if (fixes_all)
      h.residues.push_back(j);
  }
  return h;
}

} // namespace cutgroups
