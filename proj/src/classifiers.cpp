#include "cutgroups/classifiers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cutgroups/arith.hpp"
#include "cutgroups/errors.hpp"

namespace cutgroups {

namespace {

bool class_is_rational(const ClassTable& t, std::uint32_t k) {
  const std::uint64_t o = t.rep_order[k];
  for (std::uint64_t j = 1; j < o; ++j) {
    if (std::gcd(j, o) == 1 && t.power_class(k, static_cast<std::int64_t>(j)) != k)
      return false;
  }
  return true;
}

std::uint64_t primitive_root(std::uint64_t p) {
  const auto factors = prime_divisors(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    if (std::all_of(factors.begin(), factors.end(), [&](std::uint64_t q) { return pow_mod(g, (p - 1) / q, p) != 1; }))
      return g;
  }
}

// x = g (mod q), x = 1 (mod m / q)
std::uint64_t crt_lift(std::uint64_t g, std::uint64_t q, std::uint64_t m) {
  const std::uint64_t rest = m / q;
  if (rest == 1)
    return g % m;
  const std::uint64_t c = mul_mod((g + q - 1) % q, inv_mod(rest % q, q), q);
  return (1 + mul_mod(rest, c, m)) % m;
}

// Generators of (Z/mZ)^x.
std::vector<std::uint64_t> unit_generators(std::uint64_t m) {
  std::vector<std::uint64_t> gens;
  for (std::uint64_t p : prime_divisors(m)) {
    const std::uint64_t q = p_part(m, p);
    if (p == 2) {
      if (q >= 4)
        gens.push_back(crt_lift(q - 1, q, m));
      if (q >= 8)
        gens.push_back(crt_lift(5, q, m));
      continue;
    }
    std::uint64_t g = primitive_root(p);
    if (q > p && pow_mod(g, p - 1, p * p) == 1)
      g += p;
    gens.push_back(crt_lift(g, q, m));
  }
  return gens;
}

std::vector<std::uint32_t> nonrational_classes(const ClassTable& t) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 0; k < t.num_classes(); ++k) {
    if (!class_is_rational(t, k))
      out.push_back(k);
  }
  return out;
}

std::uint64_t nonrational_period(const ClassTable& t, const std::vector<std::uint32_t>& classes) {
  std::uint64_t period = 1;
  for (std::uint32_t k : classes)
    period = lcm_u(period, t.rep_order[k]);
  return period;
}

using ClassPerm = std::vector<std::uint32_t>;

// Rational classes are fixed by every unit, so only the others are moved.
ClassPerm power_action(const ClassTable& t, const std::vector<std::uint32_t>& moved, std::uint64_t j) {
  ClassPerm perm(t.num_classes());
  std::iota(perm.begin(), perm.end(), 0u);
  for (std::uint32_t k : moved)
    perm[k] = t.power_class(k, static_cast<std::int64_t>(j % t.rep_order[k]));
  return perm;
}

// The image of (Z/LZ)^x acting on classes by powering, with one residue per element.
struct PowerImage {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> generators;
  std::vector<ClassPerm> generator_perms;
  std::map<ClassPerm, std::uint64_t> elements;
};

PowerImage power_image(const ClassTable& t, const std::vector<std::uint32_t>& moved, std::uint64_t modulus) {
  PowerImage img;
  img.modulus = modulus;
  img.generators = unit_generators(modulus);
  for (std::uint64_t g : img.generators)
    img.generator_perms.push_back(power_action(t, moved, g));
  ClassPerm id(t.num_classes());
  std::iota(id.begin(), id.end(), 0u);
  img.elements.emplace(id, 1 % modulus);
  std::vector<std::pair<ClassPerm, std::uint64_t>> frontier{{id, 1 % modulus}};
  while (!frontier.empty()) {
    std::vector<std::pair<ClassPerm, std::uint64_t>> next;
    for (const auto& [perm, m] : frontier) {
      for (std::size_t i = 0; i < img.generators.size(); ++i) {
        ClassPerm q(perm.size());
        for (std::size_t k = 0; k < perm.size(); ++k)
          q[k] = img.generator_perms[i][perm[k]];
        const std::uint64_t qm = mul_mod(m, img.generators[i], modulus);
        if (img.elements.emplace(q, qm).second)
          next.emplace_back(std::move(q), qm);
      }
    }
    frontier = std::move(next);
  }
  return img;
}

bool all_fields_cut(const CharacterTable& ct) {
  for (std::size_t chi = 0; chi < ct.size(); ++chi) {
    const FieldId f = char_field(ct, chi);
    if (f.kind == FieldId::Kind::HigherDegree || (f.kind == FieldId::Kind::Quadratic && f.d > 0))
      return false;
  }
  return true;
}

bool e4_cut(const ClassTable& t) {
  const GaloisPartition part = q_class_partition(t, PowerRange::GroupOrder);
  for (std::uint32_t k = 0; k < t.num_classes(); ++k) {
    const std::uint32_t b = part.block_of[k];
    for (std::uint32_t other = 0; other < t.num_classes(); ++other) {
      if (part.block_of[other] == b && other != k && other != t.inverse_class[k])
        return false;
    }
  }
  return true;
}

std::string yes_no(bool v) { return v ? "true" : "false"; }

void add_validator(GroupReport& r, std::string name, bool ok, std::string detail = {}) {
  r.validators.push_back({std::move(name), ok, std::move(detail)});
}

GroupReport classify_common(const ClassTable& t, const StructureFlags& structure, bool q_star,
                            const CharacterTable* ct, bool run_e4) {
  GroupReport r;
  r.order = t.group_order;
  r.exponent = t.exponent;
  r.primes = prime_divisors(t.group_order);
  r.structure = structure;

  bool rational = true, cut = true, sr = true;
  std::set<std::uint64_t> nonrational_orders;
  for (std::uint32_t k = 0; k < t.num_classes(); ++k) {
    const ElementRationality er = element_rationality(t, k);
    rational = rational && er.rational;
    cut = cut && er.inverse_semirational;
    sr = sr && er.semirational;
    if (!er.rational)
      nonrational_orders.insert(er.order);
  }
  r.nonrational_orders.assign(nonrational_orders.begin(), nonrational_orders.end());
  r.flags.rational = rational;
  r.flags.cut = cut;
  r.flags.semirational = sr;
  r.usr_m_set = usr_values(t);
  r.flags.usr = !r.usr_m_set.empty();
  r.rho = rank_rho(t);
  r.q_star = q_star;
  r.central_height = central_height(q_star, cut, center_size(t));

  const ClassGroupField gf = class_group_field(t);
  r.group_field = gf.field;
  r.group_field_degree = gf.degree;
  r.class_counts = class_field_counts(t);
  r.gk = gk_graph(t);
  if (structure.solvable.value_or(false) && cut) {
    if (auto hit = figure1_lookup(r.gk))
      r.figure1_label = hit->label;
  }

  if (ct) {
    r.char_counts = char_field_counts(*ct);
    bool qr = true;
    for (std::size_t chi = 0; chi < ct->size() && qr; ++chi)
      qr = char_field(*ct, chi).degree <= 2;
    r.flags.quadratic_rational = qr;
    r.flags.qsr = sr && qr;
  }

  // Cross-checks.
  const auto& f = r.flags;
  bool chain = (!f.rational || f.cut) && (!f.cut || f.usr) && (!f.usr || f.semirational);
  if (f.qsr)
    chain = chain && (!f.usr || *f.qsr) && (!*f.qsr || (f.semirational && *f.quadratic_rational));
  add_validator(r, "inclusion_chain", chain);

  const bool usr_has_minus_one = r.usr_m_set.contains(static_cast<std::int64_t>(r.exponent) - 1);
  add_validator(r, "cut_criteria_agree", cut == usr_has_minus_one && cut == (r.rho == 0),
                "classes=" + yes_no(cut) + " usr=" + yes_no(usr_has_minus_one) + " rho=" + std::to_string(r.rho));
  if (run_e4)
    add_validator(r, "cut_coprime_to_order", e4_cut(t) == cut);
  if (f.rational)
    add_validator(r, "rational_usr_full", r.usr_m_set.period == 1 && r.usr_m_set.count == 1);

  if (ct) {
    add_validator(r, "cut_character_fields", all_fields_cut(*ct) == cut);
    add_validator(r, "usr_implies_qr", !f.usr || *f.quadratic_rational);
    add_validator(r, "real_counts", r.char_counts->real == r.class_counts.real,
                  std::to_string(r.char_counts->real) + " vs " + std::to_string(r.class_counts.real));
    add_validator(r, "orthogonality", orthogonality_holds(*ct));
    const GroupField cgf = group_field(*ct);
    add_validator(r, "group_field_agree", cgf.degree == gf.degree && cgf.field == gf.field,
                  cgf.field.str() + " vs " + gf.field.str());
    if (cut || *f.qsr) {
      add_validator(r, "rational_quadratic_counts",
                    r.char_counts->rational == r.class_counts.rational &&
                        r.char_counts->quadratic == r.class_counts.quadratic);
    }
  }
  if (sr || f.quadratic_rational.value_or(false)) {
    const std::uint64_t bound = std::uint64_t{1} << (r.primes.size() + 1);
    add_validator(r, "degree_bound", gf.degree <= bound,
                  std::to_string(gf.degree) + " <= " + std::to_string(bound));
  }
  if (r.order % 2 == 1)
    add_validator(r, "odd_order_sr_iff_cut", sr == cut);
  if (r.order % 2 == 1 || (r.primes.size() == 1 && r.primes[0] == 2)) {
    const FastCutChecks fast = fast_cut_checks(t);
    bool agree = true;
    for (const auto& v : {fast.odd_order, fast.two_group, fast.three_group})
      agree = agree && (!v || *v == cut);
    add_validator(r, "fast_cut_checks", agree);
  }
  return r;
}

} // namespace

ElementRationality element_rationality(const ClassTable& t, std::uint32_t k) {
  ElementRationality er;
  er.class_index = k;
  er.order = t.rep_order[k];
  er.stabilizer = stabilizer_units(t, k);
  er.field = fixed_field_id(er.stabilizer);
  const std::uint64_t idx = er.stabilizer.index();
  er.rational = idx == 1;
  er.semirational = idx <= 2;
  std::vector<std::uint64_t> with_minus = er.stabilizer.residues;
  with_minus.push_back(er.order - 1);
  er.inverse_semirational = generated_units(er.order, with_minus).size() == euler_phi(er.order);

  const auto units = unit_residues(er.order);
  std::vector<std::uint32_t> images;
  for (std::uint64_t j : units)
    images.push_back(t.power_class(k, static_cast<std::int64_t>(j)));
  for (std::uint32_t m = 0; m < er.order; ++m) {
    const std::uint32_t target = t.power_class(k, m);
    if (std::all_of(images.begin(), images.end(), [&](std::uint32_t c) { return c == k || c == target; }))
      er.partners.push_back(m);
  }
  return er;
}

bool UsrSet::contains(std::int64_t m) const {
  if (count == 0)
    return false;
  return std::all_of(constraints.begin(), constraints.end(), [m](const auto& c) {
    return c.second[mod_floor(m, c.first)];
  });
}

std::vector<std::uint64_t> UsrSet::lift(std::uint64_t modulus) const {
  if (modulus % period != 0)
    throw InvalidSpec("lift modulus must be a multiple of the period");
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < modulus; ++m) {
    if (contains(static_cast<std::int64_t>(m)))
      out.push_back(m);
  }
  return out;
}

UsrSet usr_values(const ClassTable& t) {
  UsrSet s;
  const auto classes = nonrational_classes(t);
  s.period = nonrational_period(t, classes);

  std::map<std::uint64_t, std::vector<bool>> by_order;
  bool feasible = true;
  for (std::uint32_t k : classes) {
    const ElementRationality er = element_rationality(t, k);
    auto it = by_order.try_emplace(er.order, std::vector<bool>(er.order, true)).first;
    std::vector<bool> admissible(er.order, false);
    for (std::uint32_t m : er.partners)
      admissible[m] = true;
    for (std::size_t m = 0; m < admissible.size(); ++m)
      it->second[m] = it->second[m] && admissible[m];
    if (er.partners.empty())
      feasible = false;
  }
  for (auto& [o, bits] : by_order)
    s.constraints.emplace_back(o, std::move(bits));

  if (!feasible) {
    s.count = 0;
    s.residues = std::vector<std::uint64_t>{};
    return s;
  }
  // Every non-rational class has an index-2 stabilizer here, so a unit m qualifies
  // exactly when powering by m moves every non-rational class.
  const PowerImage img = power_image(t, classes, s.period);
  std::uint64_t moving = 0;
  for (const auto& [perm, m] : img.elements) {
    if (std::all_of(classes.begin(), classes.end(), [&](std::uint32_t k) { return perm[k] != k; }))
      ++moving;
  }
  s.count = moving * (euler_phi(s.period) / img.elements.size());
  if (s.period <= kUsrListPeriodLimit) {
    std::vector<std::uint64_t> listed;
    for (std::uint64_t m = 0; m < s.period; ++m) {
      if (s.contains(static_cast<std::int64_t>(m)))
        listed.push_back(m);
    }
    if (listed.size() != s.count)
      throw SplitFailure("usr residue count mismatch");
    if (!listed.empty())
      s.least = listed.front();
    s.residues = std::move(listed);
  }
  return s;
}

ClassGroupField class_group_field(const ClassTable& t) {
  ClassGroupField out;
  const auto classes = nonrational_classes(t);
  out.modulus = nonrational_period(t, classes);
  const PowerImage img = power_image(t, classes, out.modulus);
  out.degree = img.elements.size();
  if (out.degree == 1) {
    out.field = FieldId::rationals();
  } else if (out.degree > 2) {
    out.field = FieldId::higher(out.degree);
  } else {
    // The quadratic character of the field is read off on the generators.
    ClassPerm id(t.num_classes());
    std::iota(id.begin(), id.end(), 0u);
    std::vector<int> signs;
    for (const auto& perm : img.generator_perms)
      signs.push_back(perm == id ? 1 : -1);
    std::vector<std::int64_t> found;
    const auto m = static_cast<std::int64_t>(out.modulus);
    for (std::uint64_t a : divisors(out.modulus)) {
      for (std::int64_t d : {static_cast<std::int64_t>(a), -static_cast<std::int64_t>(a)}) {
        if (d == 1 || !is_squarefree(d))
          continue;
        const std::int64_t disc = quadratic_discriminant(d);
        if (m % std::abs(disc) != 0)
          continue;
        bool match = true;
        for (std::size_t i = 0; i < signs.size() && match; ++i)
          match = kronecker_symbol(disc, static_cast<std::int64_t>(img.generators[i])) == signs[i];
        if (match)
          found.push_back(d);
      }
    }
    if (found.size() != 1)
      throw NoQuadraticFound("group field of degree 2 matched " + std::to_string(found.size()) + " fields");
    out.field = FieldId::quadratic(found.front());
  }
  return out;
}

std::uint64_t rank_rho(const ClassTable& t) {
  return r_class_partition(t).num_blocks - q_class_partition(t).num_blocks;
}

bool q_star_detect(const FiniteGroup& g) {
  for (const Subgroup& h : index_two_abelian_subgroups(g)) {
    const bool elementary_two = std::all_of(h.elements.begin(), h.elements.end(),
                                            [&](Elem x) { return g.elem_order(x) <= 2; });
    if (elementary_two)
      continue;
    std::set<Elem> squares;
    for (Elem b : h.elements)
      squares.insert(g.mul(b, b));
    for (Elem a = 0; a < g.order(); ++a) {
      if (g.elem_order(a) != 4 || h.contains(a))
        continue;
      const bool inverts = std::all_of(h.generators.begin(), h.generators.end(),
                                       [&](Elem x) { return g.conj(x, a) == g.inv(x); });
      if (inverts && squares.count(g.mul(a, a)))
        return true;
    }
  }
  return false;
}

std::uint32_t central_height(bool q_star, bool cut, Count center) {
  if (q_star)
    return 2;
  return (cut && center == 1) ? 0 : 1;
}

Count center_size(const ClassTable& t) {
  Count c = 0;
  for (Count s : t.sizes)
    c += (s == 1);
  return c;
}

FastCutChecks fast_cut_checks(const ClassTable& t) {
  const auto primes = prime_divisors(t.group_order);
  const bool odd = t.group_order % 2 == 1;
  const bool two_group = primes.empty() || (primes.size() == 1 && primes[0] == 2);
  const bool three_group = primes.empty() || (primes.size() == 1 && primes[0] == 3);
  if (!odd && !two_group)
    throw NotApplicable("fast cut checks need odd order or a 2-group");
  auto every = [&t](auto pred) {
    for (std::uint32_t k = 0; k < t.num_classes(); ++k) {
      if (!pred(k))
        return false;
    }
    return true;
  };
  FastCutChecks out;
  if (odd) {
    out.odd_order = every([&t](std::uint32_t k) {
      std::uint64_t o = t.rep_order[k];
      const bool seven = o == 7;
      while (o % 3 == 0)
        o /= 3;
      return (seven || o == 1) && t.power_class(k, 5) == t.inverse_class[k];
    });
  }
  if (two_group) {
    out.two_group = every([&t](std::uint32_t k) {
      const std::uint32_t c = t.power_class(k, 3);
      return c == k || c == t.inverse_class[k];
    });
  }
  if (three_group)
    out.three_group = every([&t](std::uint32_t k) { return t.power_class(k, 2) == t.inverse_class[k]; });
  return out;
}

FastCutChecks fast_cut_checks(const FiniteGroup& g) { return fast_cut_checks(conjugacy_classes(g)); }

bool GroupReport::all_valid() const {
  return std::all_of(validators.begin(), validators.end(), [](const ValidatorResult& v) { return v.ok; });
}

GroupReport classify(const FiniteGroup& g, const ClassTable& t, const CharacterTable* ct, const ClassifyOptions& opts) {
  const SolvabilityFlags sf = solvability_flags(g);
  const StructureFlags structure{sf.is_abelian, sf.is_nilpotent, sf.is_solvable};
  const bool run_e4 = opts.e4_crosscheck && t.group_order <= (Count{1} << 20);
  return classify_common(t, structure, q_star_detect(g), ct, run_e4);
}

GroupReport classify(const FiniteGroup& g, const ClassifyOptions& opts) {
  const ClassTable t = conjugacy_classes(g);
  if (g.order() > opts.char_table_cap)
    return classify(g, t, nullptr, opts);
  const CharacterTable ct = dixon_table(g, t, opts.dixon_prime);
  return classify(g, t, &ct, opts);
}

GroupReport classify_virtual(const ClassTable& t, const StructureFlags& structure) {
  return classify_common(t, structure, false, nullptr, false);
}

} // namespace cutgroups
