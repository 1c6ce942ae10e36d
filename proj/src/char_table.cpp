#include "cutgroups/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cutgroups/errors.hpp"

namespace cutgroups {

namespace {

using Vec = std::vector<std::uint64_t>;

class ModP {
public:
  explicit ModP(std::uint64_t p) : p_(p) {}
  std::uint64_t p() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t inv(std::uint64_t a) const { return pow_mod(a, p_ - 2, p_); }
  std::uint64_t pow(std::uint64_t a, std::uint64_t k) const { return pow_mod(a, k, p_); }

private:
  std::uint64_t p_;
};

std::uint64_t ceil_sqrt(Count n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<Count>(r) * r > n)
    --r;
  while (static_cast<Count>(r) * r < n)
    ++r;
  return r;
}

bool prime_is_valid(Count order, std::uint64_t e, std::uint64_t p) {
  return is_prime(p) && p % e == 1 % e && static_cast<Count>(p) > 2 * static_cast<Count>(ceil_sqrt(order));
}

constexpr std::uint64_t kPrimeSearchBound = std::uint64_t{1} << 20;

// Row-reduces rows in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows, const ModP& f) {
  std::vector<std::size_t> pivots;
  if (rows.empty())
    return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[r], rows[piv]);
    const std::uint64_t s = f.inv(rows[r][col]);
    for (auto& x : rows[r])
      x = f.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0)
        continue;
      const std::uint64_t m = rows[i][col];
      for (std::size_t k = col; k < ncols; ++k)
        rows[i][k] = f.sub(rows[i][k], f.mul(m, rows[r][k]));
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Null space of the square matrix a (row-major, n x n) as column vectors.
std::vector<Vec> kernel(std::vector<Vec> a, const ModP& f) {
  const std::size_t n = a.size();
  auto pivots = rref(a, f);
  std::vector<char> is_pivot(n, 0);
  for (std::size_t c : pivots)
    is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f.sub(0, a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial via reduction to Hessenberg form; ascending coefficients.
Vec charpoly(std::vector<Vec> h, const ModP& f) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h[i][j] == 0)
      ++i;
    if (i == n)
      continue;
    if (i != j + 1) {
      std::swap(h[i], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r)
        std::swap(h[r][i], h[r][j + 1]);
    }
    const std::uint64_t piv_inv = f.inv(h[j + 1][j]);
    for (std::size_t r = j + 2; r < n; ++r) {
      const std::uint64_t u = f.mul(h[r][j], piv_inv);
      if (u == 0)
        continue;
      for (std::size_t k = 0; k < n; ++k)
        h[r][k] = f.sub(h[r][k], f.mul(u, h[j + 1][k]));
      for (std::size_t k = 0; k < n; ++k)
        h[k][j + 1] = f.add(h[k][j + 1], f.mul(u, h[k][r]));
    }
  }
  std::vector<Vec> polys(n + 1);
  polys[0] = Vec{1};
  for (std::size_t m = 1; m <= n; ++m) {
    Vec pm(m + 1, 0);
    const Vec& prev = polys[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      pm[k + 1] = f.add(pm[k + 1], prev[k]);
      pm[k] = f.sub(pm[k], f.mul(h[m - 1][m - 1], prev[k]));
    }
    std::uint64_t t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = f.mul(t, h[i][i - 1]);
      const std::uint64_t c = f.mul(t, h[i - 1][m - 1]);
      if (c != 0) {
        for (std::size_t k = 0; k < polys[i - 1].size(); ++k)
          pm[k] = f.sub(pm[k], f.mul(c, polys[i - 1][k]));
      }
      if (t == 0)
        break;
    }
    polys[m] = std::move(pm);
  }
  return polys[n];
}

std::uint64_t eval(const Vec& poly, std::uint64_t x, const ModP& f) {
  std::uint64_t acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;)
    acc = f.add(f.mul(acc, x), poly[i]);
  return acc;
}

// Distinct roots in F_p; throws SplitFailure if the polynomial does not split.
std::vector<std::uint64_t> roots(Vec poly, const ModP& f) {
  std::vector<std::uint64_t> out;
  std::size_t found = 0;
  const std::size_t degree = poly.size() - 1;
  for (std::uint64_t x = 0; x < f.p() && found < degree; ++x) {
    if (eval(poly, x, f) != 0)
      continue;
    out.push_back(x);
    while (poly.size() > 1 && eval(poly, x, f) == 0) {
      // Synthetic division by (X - x).
      Vec q(poly.size() - 1);
      std::uint64_t carry = 0;
      for (std::size_t i = poly.size(); i-- > 1;) {
        carry = f.add(poly[i], f.mul(carry, x));
        q[i - 1] = carry;
      }
      poly = std::move(q);
      ++found;
    }
  }
  if (found != degree)
    throw SplitFailure("characteristic polynomial does not split over F_p");
  return out;
}

std::uint64_t primitive_root(const ModP& f) {
  const std::uint64_t p = f.p();
  const auto qs = prime_divisors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    if (std::all_of(qs.begin(), qs.end(), [&](std::uint64_t q) { return f.pow(g, (p - 1) / q) != 1; }))
      return g;
  }
  return 1;  // p = 2
}

struct ClassData {
  std::vector<std::vector<Elem>> members;
};

// (M_i)[j][k] = a[i][j][k] mod p
std::vector<Vec> class_matrix(const FiniteGroup& g, const ClassTable& t, const ClassData& cd, std::size_t i,
                              const ModP& f) {
  const std::size_t c = t.num_classes();
  std::vector<Vec> m(c, Vec(c, 0));
  for (std::size_t k = 0; k < c; ++k) {
    const Elem z = t.reps[k];
    for (Elem u : cd.members[i])
      ++m[t.class_of[g.mul(g.inv(u), z)]][k];
  }
  for (auto& row : m)
    for (auto& x : row)
      x %= f.p();
  return m;
}

// Sum_t mult_t * zeta_e^t reduced modulo Phi_e; zero iff the element vanishes.
std::vector<__int128> reduce_mod_phi(std::vector<__int128> a, const CyclotomicField& field) {
  const std::size_t phi = field.phi;
  std::vector<std::pair<std::size_t, std::int64_t>> nz;
  for (std::size_t k = 0; k < phi; ++k) {
    if (field.cyclotomic_poly[k] != 0)
      nz.emplace_back(k, field.cyclotomic_poly[k]);
  }
  for (std::size_t i = a.size(); i-- > phi;) {
    const __int128 c = a[i];
    if (c == 0)
      continue;
    a[i] = 0;
    for (auto [k, coef] : nz)
      a[i - phi + k] -= c * coef;
  }
  a.resize(phi);
  return a;
}

bool equals_integer(const std::vector<__int128>& reduced, __int128 value) {
  if (reduced[0] != value)
    return false;
  return std::all_of(reduced.begin() + 1, reduced.end(), [](__int128 x) { return x == 0; });
}

bool rows_less(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (lex_less(a[k], b[k]))
      return true;
    if (lex_less(b[k], a[k]))
      return false;
  }
  return false;
}

} // namespace

ClassConstants class_constants(const FiniteGroup& g, const ClassTable& t) {
  const std::size_t c = t.num_classes();
  ClassConstants a(c, std::vector<std::vector<std::uint64_t>>(c, std::vector<std::uint64_t>(c, 0)));
  for (std::size_t k = 0; k < c; ++k) {
    const Elem z = t.reps[k];
    for (Elem u = 0; u < g.order(); ++u)
      ++a[t.class_of[u]][t.class_of[g.mul(g.inv(u), z)]][k];
  }
  return a;
}

std::uint64_t next_dixon_prime(Count order, std::uint64_t exponent, std::uint64_t after) {
  const std::uint64_t e = std::max<std::uint64_t>(exponent, 1);
  const std::uint64_t floor_p = 2 * ceil_sqrt(order) + 1;
  std::uint64_t start = std::max(after + 1, floor_p);
  // First candidate = 1 (mod e) at or above start.
  std::uint64_t p = start + (e + 1 - start % e) % e;
  if (e == 1)
    p = start;
  for (; p < kPrimeSearchBound; p += e) {
    if (prime_is_valid(order, e, p))
      return p;
  }
  throw NoSuitablePrime("no prime = 1 mod " + std::to_string(e) + " below 2^20");
}

std::uint64_t default_dixon_prime(Count order, std::uint64_t exponent) { return next_dixon_prime(order, exponent, 0); }

CharacterTable dixon_table(const FiniteGroup& g, const ClassTable& t, std::optional<std::uint64_t> prime) {
  if (t.is_virtual())
    throw NotApplicable("character tables need a realized group");
  const std::size_t c = t.num_classes();
  const std::uint64_t e = t.exponent;
  const Count order = t.group_order;
  std::uint64_t p;
  if (prime) {
    if (!prime_is_valid(order, e, *prime))
      throw NoSuitablePrime("prime " + std::to_string(*prime) + " is not a valid Dixon prime for this group");
    p = *prime;
  } else {
    p = default_dixon_prime(order, e);
  }
  const ModP f(p);

  ClassData cd;
  cd.members.resize(c);
  for (Elem x = 0; x < g.order(); ++x)
    cd.members[t.class_of[x]].push_back(x);

  // Common eigenspaces of the class matrices, split one matrix at a time.
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> id(c, Vec(c, 0));
    for (std::size_t k = 0; k < c; ++k)
      id[k][k] = 1;
    spaces.push_back(std::move(id));
  }
  std::vector<std::size_t> order_idx(c > 0 ? c - 1 : 0);
  std::iota(order_idx.begin(), order_idx.end(), std::size_t{1});
  std::stable_sort(order_idx.begin(), order_idx.end(), [&t](std::size_t a, std::size_t b) {
    if (t.sizes[a] != t.sizes[b])
      return t.sizes[a] < t.sizes[b];
    return t.rep_order[a] < t.rep_order[b];
  });
  auto all_split = [&spaces] {
    return std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
  };
  for (std::size_t i : order_idx) {
    if (all_split())
      break;
    const auto m = class_matrix(g, t, cd, i, f);
    std::vector<std::vector<Vec>> next;
    for (auto& basis : spaces) {
      const std::size_t d = basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      auto pivots = rref(basis, f);
      // Restriction of M_i to the span of basis (columns are images).
      std::vector<Vec> r(d, Vec(d, 0));
      for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t q = 0; q < d; ++q) {
          const std::size_t row = pivots[q];
          std::uint64_t acc = 0;
          for (std::size_t k = 0; k < c; ++k) {
            if (basis[b][k] != 0)
              acc = f.add(acc, f.mul(m[row][k], basis[b][k]));
          }
          r[q][b] = acc;
        }
      }
      bool scalar = true;
      for (std::size_t a = 0; a < d && scalar; ++a)
        for (std::size_t b = 0; b < d && scalar; ++b)
          scalar = r[a][b] == (a == b ? r[0][0] : 0);
      if (scalar) {
        next.push_back(std::move(basis));
        continue;
      }
      std::size_t total = 0;
      for (std::uint64_t lambda : roots(charpoly(r, f), f)) {
        auto shifted = r;
        for (std::size_t a = 0; a < d; ++a)
          shifted[a][a] = f.sub(shifted[a][a], lambda);
        std::vector<Vec> sub;
        for (const Vec& y : kernel(shifted, f)) {
          Vec v(c, 0);
          for (std::size_t b = 0; b < d; ++b) {
            if (y[b] == 0)
              continue;
            for (std::size_t k = 0; k < c; ++k)
              v[k] = f.add(v[k], f.mul(y[b], basis[b][k]));
          }
          sub.push_back(std::move(v));
        }
        total += sub.size();
        next.push_back(std::move(sub));
      }
      if (total != d)
        throw SplitFailure("class matrix is not diagonalizable on an eigenspace");
    }
    spaces = std::move(next);
  }
  if (!all_split() || spaces.size() != c)
    throw SplitFailure("eigenspaces did not split into lines");

  // Lines to characters.
  const std::uint64_t z = f.pow(primitive_root(f), (p - 1) / e);
  CharacterTable ct;
  ct.classes = std::make_shared<ClassTable>(t);
  ct.prime = p;
  ct.conductor = e;
  struct Row {
    std::uint64_t degree;
    std::vector<Cyclotomic> values;
    std::vector<std::vector<std::uint32_t>> roots;
  };
  std::vector<Row> rows;
  const auto isqrt_order = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(order)) + 1);
  for (auto& space : spaces) {
    Vec w = space[0];
    if (w[0] == 0)
      throw SplitFailure("eigenvector vanishes at the identity class");
    const std::uint64_t s0 = f.inv(w[0]);
    for (auto& x : w)
      x = f.mul(x, s0);
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < c; ++k)
      s = f.add(s, f.mul(f.mul(w[k], w[t.inverse_class[k]]), f.inv(static_cast<std::uint64_t>(t.sizes[k] % p))));
    const std::uint64_t d2 = f.mul(static_cast<std::uint64_t>(order % p), f.inv(s));
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= isqrt_order; ++d) {
      if (f.mul(d % p, d % p) == d2) {
        degree = d;
        break;
      }
    }
    if (degree == 0)
      throw SplitFailure("no degree matches the eigenvector");
    Vec chi(c);
    for (std::size_t k = 0; k < c; ++k)
      chi[k] = f.mul(f.mul(w[k], degree % p), f.inv(static_cast<std::uint64_t>(t.sizes[k] % p)));
    Row row{degree, {}, {}};
    for (std::size_t k = 0; k < c; ++k) {
      const std::uint64_t o = t.rep_order[k];
      const std::uint64_t zo = f.pow(z, e / o);
      const std::uint64_t zo_inv = f.inv(zo);
      const std::uint64_t o_inv = f.inv(o % p);
      std::vector<std::uint32_t> mult(o, 0);
      std::vector<std::pair<std::uint64_t, std::int64_t>> terms;
      std::uint64_t total = 0;
      if (degree == 1) {
        // chi(rep_k) is itself a power of zo.
        std::uint64_t pw = 1;
        for (std::uint64_t sidx = 0; sidx < o; ++sidx, pw = f.mul(pw, zo)) {
          if (pw == chi[k]) {
            mult[sidx] = 1;
            total = 1;
            terms.emplace_back(sidx * (e / o), 1);
            break;
          }
        }
      } else {
        for (std::uint64_t sidx = 0; sidx < o && total < degree; ++sidx) {
          std::uint64_t acc = 0;
          const std::uint64_t step = f.pow(zo_inv, sidx);
          std::uint64_t w_j = 1;
          for (std::uint64_t j = 0; j < o; ++j) {
            acc = f.add(acc, f.mul(chi[t.power_class(static_cast<std::uint32_t>(k), static_cast<std::int64_t>(j))], w_j));
            w_j = f.mul(w_j, step);
          }
          acc = f.mul(acc, o_inv);
          if (acc > degree - total)
            throw SplitFailure("eigenvalue multiplicity out of range");
          mult[sidx] = static_cast<std::uint32_t>(acc);
          total += acc;
          if (acc != 0)
            terms.emplace_back(sidx * (e / o), static_cast<std::int64_t>(acc));
        }
      }
      if (total != degree)
        throw SplitFailure("eigenvalue multiplicities do not sum to the degree");
      row.values.push_back(Cyclotomic::from_root_sum(e, terms));
      row.roots.push_back(std::move(mult));
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree)
      return a.degree < b.degree;
    return rows_less(a.values, b.values);
  });
  Count sum_sq = 0;
  for (auto& r : rows) {
    sum_sq += static_cast<Count>(r.degree) * r.degree;
    ct.degrees.push_back(r.degree);
    ct.values.push_back(std::move(r.values));
    ct.roots.push_back(std::move(r.roots));
  }
  if (sum_sq != order || !orthogonality_holds(ct))
    throw SplitFailure("computed table fails orthogonality");
  return ct;
}

bool orthogonality_holds(const CharacterTable& ct) {
  const ClassTable& t = *ct.classes;
  const std::size_t c = ct.size();
  const std::uint64_t e = ct.conductor;
  const auto& field = cyclotomic_field(e);
  // sparse[chi][k] = nonzero (exponent of zeta_e, multiplicity) pairs
  std::vector<std::vector<std::vector<std::pair<std::uint64_t, std::uint32_t>>>> sparse(c);
  for (std::size_t a = 0; a < c; ++a) {
    sparse[a].resize(t.num_classes());
    for (std::size_t k = 0; k < t.num_classes(); ++k) {
      const std::uint64_t step = e / t.rep_order[k];
      for (std::uint64_t s = 0; s < t.rep_order[k]; ++s) {
        if (ct.roots[a][k][s] != 0)
          sparse[a][k].emplace_back(s * step, ct.roots[a][k][s]);
      }
    }
  }
  // Rows: sum_k |C_k| chi(k) conj(psi(k)) = |G| [chi = psi].
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = a; b < c; ++b) {
      std::vector<__int128> acc(e, 0);
      for (std::size_t k = 0; k < t.num_classes(); ++k) {
        for (auto [xa, ma] : sparse[a][k])
          for (auto [xb, mb] : sparse[b][k])
            acc[(xa + e - xb) % e] += static_cast<__int128>(t.sizes[k]) * ma * mb;
      }
      if (!equals_integer(reduce_mod_phi(std::move(acc), field), a == b ? static_cast<__int128>(t.group_order) : 0))
        return false;
    }
  }
  // Columns: sum_chi chi(k) conj(chi(l)) = |C_G(rep_k)| [k = l].
  for (std::size_t k = 0; k < t.num_classes(); ++k) {
    for (std::size_t l = k; l < t.num_classes(); ++l) {
      std::vector<__int128> acc(e, 0);
      for (std::size_t a = 0; a < c; ++a) {
        for (auto [xa, ma] : sparse[a][k])
          for (auto [xb, mb] : sparse[a][l])
            acc[(xa + e - xb) % e] += static_cast<__int128>(ma) * mb;
      }
      const __int128 expect = k == l ? static_cast<__int128>(t.group_order / t.sizes[k]) : 0;
      if (!equals_integer(reduce_mod_phi(std::move(acc), field), expect))
        return false;
    }
  }
  return true;
}

UnitSubgroup char_stabilizer(const CharacterTable& ct, std::size_t chi) {
  const ClassTable& t = *ct.classes;
  UnitSubgroup h{ct.conductor, {}};
  for (std::uint64_t j : unit_residues(ct.conductor)) {
    bool fixed = true;
    for (std::uint32_t k = 0; k < t.num_classes() && fixed; ++k)
      fixed = ct.values[chi][t.power_class(k, static_cast<std::int64_t>(j))] == ct.values[chi][k];
    if (fixed)
      h.residues.push_back(j);
  }
  return h;
}

FieldId char_field(const CharacterTable& ct, std::size_t chi) { return fixed_field_id(char_stabilizer(ct, chi)); }

bool char_is_real(const CharacterTable& ct, std::size_t chi) {
  const ClassTable& t = *ct.classes;
  for (std::uint32_t k = 0; k < t.num_classes(); ++k) {
    if (!(ct.values[chi][t.inverse_class[k]] == ct.values[chi][k]))
      return false;
  }
  return true;
}

GroupField group_field(const CharacterTable& ct) {
  UnitSubgroup h = full_unit_group(ct.conductor);
  for (std::size_t chi = 0; chi < ct.size(); ++chi)
    h = intersect(h, char_stabilizer(ct, chi));
  return {h, h.index(), fixed_field_id(h)};
}

FieldCounts char_field_counts(const CharacterTable& ct) {
  FieldCounts out;
  for (std::size_t chi = 0; chi < ct.size(); ++chi) {
    out.real += char_is_real(ct, chi);
    const auto deg = char_field(ct, chi).degree;
    out.rational += deg == 1;
    out.quadratic += deg == 2;
  }
  return out;
}

FieldCounts class_field_counts(const ClassTable& t) {
  FieldCounts out;
  for (std::uint32_t k = 0; k < t.num_classes(); ++k) {
    out.real += t.inverse_class[k] == k;
    const auto deg = element_field(t, k).degree;
    out.rational += deg == 1;
    out.quadratic += deg == 2;
  }
  return out;
}

CountsRecord field_counts(const CharacterTable& ct, const ClassTable& t) {
  return {char_field_counts(ct), class_field_counts(t)};
}

} // namespace cutgroups
