#include "cutgroups/surveys.hpp"

#include <algorithm>
#include <map>

#include "cutgroups/arith.hpp"
#include "cutgroups/errors.hpp"
#include "cutgroups/sym_fastpath.hpp"

namespace cutgroups {

namespace {

bool subset_of(const std::vector<std::uint64_t>& primes, std::initializer_list<std::uint64_t> allowed) {
  return std::all_of(primes.begin(), primes.end(), [&](std::uint64_t p) {
    return std::find(allowed.begin(), allowed.end(), p) != allowed.end();
  });
}

std::string primes_text(const std::vector<std::uint64_t>& primes) {
  std::string out = "{";
  for (std::size_t i = 0; i < primes.size(); ++i)
    out += (i ? "," : "") + std::to_string(primes[i]);
  return out + "}";
}

StructureFlags symmetric_structure(const SymmetricId& id) {
  const bool abelian = id.n <= (id.alternating ? 3u : 2u);
  const bool solvable = id.n <= 4;
  return {abelian, abelian, solvable};
}

} // namespace

GroupReport analyze(const GroupSpec& spec, const AnalyzeOptions& opts) {
  GroupReport report;
  const auto sym = symmetric_id(spec);
  const auto predicted = predicted_order(spec);
  if (sym && (sym->n >= 10 || (predicted && *predicted > opts.cap))) {
    const ClassTable t = sym->alternating ? alt_class_table(sym->n) : sym_class_table(sym->n);
    report = classify_virtual(t, symmetric_structure(*sym));
  } else {
    const FiniteGroup g = realize(spec, opts.cap);
    ClassifyOptions co;
    co.dixon_prime = opts.dixon_prime;
    co.char_table_cap = std::min<std::uint64_t>(co.char_table_cap, opts.cap);
    report = classify(g, co);
  }
  report.spec = render_spec(spec);
  const auto violations = spectrum_validate(report, report.structure);
  if (violations.empty())
    report.validators.push_back({"spectrum", true, {}});
  for (const std::string& v : violations)
    report.validators.push_back({"spectrum", false, v});
  return report;
}

std::vector<std::string> spectrum_validate(const GroupReport& r, const StructureFlags& structure) {
  std::vector<std::string> out;
  if (r.order == 1)
    return out;
  const auto& pi = r.primes;
  const bool qr = r.flags.quadratic_rational.value_or(false);
  const bool qsr = r.flags.qsr.value_or(false);
  const bool any_class = r.flags.semirational || qr;
  const bool solvable = structure.solvable.value_or(false);
  auto has = [&pi](std::uint64_t p) { return std::find(pi.begin(), pi.end(), p) != pi.end(); };

  if (any_class && !has(2) && !has(3))
    out.push_back("cut/SR/QR group with neither 2 nor 3 in " + primes_text(pi));
  if (any_class && structure.nilpotent.value_or(false) && !subset_of(pi, {2, 3}))
    out.push_back("nilpotent group in a class with spectrum " + primes_text(pi) + " not in {2,3}");
  if (any_class && r.order % 2 == 1 && !subset_of(pi, {3, 7}))
    out.push_back("odd-order group in a class with spectrum " + primes_text(pi) + " not in {3,7}");
  if (solvable && r.flags.cut && !subset_of(pi, {2, 3, 5, 7}))
    out.push_back("solvable cut group with spectrum " + primes_text(pi) + " not in {2,3,5,7}");
  if (solvable && (r.flags.usr || qr || qsr) && !subset_of(pi, {2, 3, 5, 7, 13}))
    out.push_back("solvable USR/QR/QSR group with spectrum " + primes_text(pi) + " not in {2,3,5,7,13}");
  if (solvable && r.flags.semirational && !subset_of(pi, {2, 3, 5, 7, 13, 17}))
    out.push_back("solvable SR group with spectrum " + primes_text(pi) + " not in {2,3,5,7,13,17}");
  return out;
}

const char* class_name(GroupClass x) {
  switch (x) {
  case GroupClass::Cut:
    return "cut";
  case GroupClass::USR:
    return "usr";
  case GroupClass::QSR:
    return "qsr";
  case GroupClass::SR:
    return "semirational";
  case GroupClass::QR:
    return "quadratic_rational";
  }
  return "";
}

std::optional<bool> in_class(const GroupReport& r, GroupClass x) {
  switch (x) {
  case GroupClass::Cut:
    return r.flags.cut;
  case GroupClass::USR:
    return r.flags.usr;
  case GroupClass::QSR:
    return r.flags.qsr;
  case GroupClass::SR:
    return r.flags.semirational;
  case GroupClass::QR:
    return r.flags.quadratic_rational;
  }
  return std::nullopt;
}

bool predict_product(const GroupReport& a, const GroupReport& b, GroupClass x) {
  for (const GroupReport* r : {&a, &b}) {
    if (in_class(*r, x) != true)
      throw NotApplicable(std::string("factor is not in class ") + class_name(x));
  }
  if (a.flags.rational || b.flags.rational)
    return true;
  if (a.group_field.kind != FieldId::Kind::Quadratic || !(a.group_field == b.group_field))
    return false;
  return x != GroupClass::Cut || a.group_field.d < 0;
}

bool cut_product_gcd_criterion(const GroupReport& a, const GroupReport& b) {
  for (std::uint64_t n1 : a.nonrational_orders) {
    for (std::uint64_t n2 : b.nonrational_orders) {
      const std::uint64_t g = gcd_u(n1, n2);
      if (g != 3 && g != 4 && g != 6)
        return false;
    }
  }
  return true;
}

bool verify_product(const GroupSpec& a, const GroupSpec& b, GroupClass x, const AnalyzeOptions& opts) {
  const GroupReport r = analyze(make_product({a, b}), opts);
  const auto v = in_class(r, x);
  if (!v)
    throw OrderCapExceeded("character table not built for the product");
  return *v;
}

bool Fingerprint::operator<(const Fingerprint& o) const {
  auto key = [](const Fingerprint& f) {
    return std::tie(f.order, f.exponent, f.class_sizes, f.order_histogram, f.rational, f.cut, f.semirational, f.usr,
                    f.quadratic_rational);
  };
  return key(*this) < key(o);
}

Fingerprint fingerprint(const ClassTable& t, const GroupReport& r) {
  Fingerprint f;
  f.order = t.group_order;
  f.exponent = t.exponent;
  f.class_sizes = t.sizes;
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  std::map<std::uint64_t, Count> hist;
  for (std::size_t k = 0; k < t.num_classes(); ++k)
    hist[t.rep_order[k]] += t.sizes[k];
  f.order_histogram.assign(hist.begin(), hist.end());
  f.rational = r.flags.rational;
  f.cut = r.flags.cut;
  f.semirational = r.flags.semirational;
  f.usr = r.flags.usr;
  f.quadratic_rational = r.flags.quadratic_rational;
  return f;
}

std::vector<MetacyclicParams> metacyclic_search_space() {
  std::vector<MetacyclicParams> out;
  for (std::uint64_t n = 1; n <= 42; ++n) {
    const std::uint64_t phi = euler_phi(n);
    if (phi != 1 && phi != 2 && phi != 4 && phi != 6 && phi != 8 && phi != 12)
      continue;
    for (std::uint64_t t : {2, 3, 4, 6}) {
      for (std::uint64_t l : divisors(n)) {
        for (std::uint64_t r = 0; r < n; ++r) {
          if (r == 1 % n || pow_mod(r, t, n) != 1 % n || mul_mod(l, (r + n - 1) % n, n) != 0)
            continue;
          out.push_back({n, t, l, r});
        }
      }
    }
  }
  return out;
}

MetacyclicSurvey metacyclic_sr_survey() {
  MetacyclicSurvey survey;
  std::map<Fingerprint, std::size_t> seen;
  for (const MetacyclicParams& p : metacyclic_search_space()) {
    const GroupSpec spec = make_metacyclic(p.n, p.t, p.l, p.r);
    const FiniteGroup g = realize(spec);
    const ClassTable t = conjugacy_classes(g);
    const CharacterTable ct = dixon_table(g, t);
    GroupReport r = classify(g, t, &ct);
    r.spec = render_spec(spec);
    if (r.flags.semirational && !r.flags.cut) {
      const Fingerprint f = fingerprint(t, r);
      auto it = seen.find(f);
      if (it == seen.end()) {
        seen.emplace(f, survey.rows.size());
        survey.rows.push_back({spec, f, r.flags, r.usr_m_set, "also:"});
      } else {
        survey.rows[it->second].notes += " " + r.spec;
      }
    }
    survey.all.emplace_back(p, std::move(r));
  }
  for (auto& row : survey.rows) {
    if (row.notes == "also:")
      row.notes.clear();
  }
  return survey;
}

const std::vector<PaperMetacyclicEntry>& paper_metacyclic_table() {
  static const std::vector<PaperMetacyclicEntry> table = {
      {{5, 2, 5, 4}, 2},    {{8, 2, 4, 7}, 3},    {{8, 2, 8, 7}, 3},      {{10, 2, 5, 9}, 3},
      {{10, 2, 10, 9}, 3},  {{12, 2, 6, 11}, 7},  {{12, 2, 12, 11}, 5},   {{8, 4, 8, 7}, 3},
      {{10, 4, 10, 9}, 3},  {{12, 4, 12, 11}, 7}, {{13, 6, 13, 4}, 5},    {{21, 6, 21, 5}, 11},
      {{26, 6, 26, 17}, 11}, {{28, 6, 14, 3}, 5}, {{28, 6, 28, 3}, 5},    {{42, 6, 42, 5}, 11},
      {{8, 4, 4, 3}, std::nullopt}, {{12, 4, 6, 11}, std::nullopt},
  };
  return table;
}

std::vector<std::string> compare_metacyclic_with_paper(const MetacyclicSurvey& survey) {
  std::vector<std::string> issues;
  const auto& table = paper_metacyclic_table();
  if (survey.rows.size() != table.size())
    issues.push_back("expected " + std::to_string(table.size()) + " rows, found " + std::to_string(survey.rows.size()));
  std::vector<Fingerprint> expected;
  for (const auto& e : table) {
    const FiniteGroup g = realize(make_metacyclic(e.params.n, e.params.t, e.params.l, e.params.r));
    const ClassTable t = conjugacy_classes(g);
    const CharacterTable ct = dixon_table(g, t);
    expected.push_back(fingerprint(t, classify(g, t, &ct)));
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    for (std::size_t j = i + 1; j < expected.size(); ++j) {
      if (expected[i] == expected[j])
        issues.push_back("published rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                         " share a fingerprint");
    }
  }
  std::vector<int> hits(table.size(), 0);
  for (const SurveyRow& row : survey.rows) {
    std::vector<std::size_t> matches;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (expected[i] == row.fingerprint)
        matches.push_back(i);
    }
    const std::string name = render_spec(row.spec);
    if (matches.size() != 1) {
      issues.push_back(name + " matches " + std::to_string(matches.size()) + " published rows");
      continue;
    }
    const auto& e = table[matches.front()];
    ++hits[matches.front()];
    if (e.m) {
      if (!row.usr_m_set.contains(static_cast<std::int64_t>(*e.m)))
        issues.push_back(name + ": m = " + std::to_string(*e.m) + " not in the residue set");
    } else if (!row.usr_m_set.empty()) {
      issues.push_back(name + ": expected no uniform m");
    }
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (hits[i] != 1)
      issues.push_back("published row " + std::to_string(i + 1) + " matched " + std::to_string(hits[i]) + " times");
  }
  return issues;
}

std::vector<AlternatingRow> alternating_survey(std::uint32_t max_n) {
  if (max_n < 1 || max_n > kMaxFastpathDegree)
    throw NOutOfRange("alternating survey needs 1 <= n <= " + std::to_string(kMaxFastpathDegree));
  std::vector<AlternatingRow> rows;
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    const GroupReport r = classify_virtual(alt_class_table(n), symmetric_structure({true, n}));
    rows.push_back({n, r.flags.cut, r.flags.usr, r.flags.semirational, r.usr_m_set});
  }
  return rows;
}

const std::vector<std::uint32_t>& paper_alternating_cut_list() {
  static const std::vector<std::uint32_t> v = {1, 2, 3, 4, 7, 8, 9, 12};
  return v;
}

const std::vector<std::uint32_t>& paper_alternating_non_usr_list() {
  static const std::vector<std::uint32_t> v = {16, 21};
  return v;
}

std::vector<std::string> compare_alternating_with_paper(const std::vector<AlternatingRow>& rows) {
  std::vector<std::string> issues;
  const auto& cut = paper_alternating_cut_list();
  const auto& non_usr = paper_alternating_non_usr_list();
  for (const auto& row : rows) {
    const bool want_cut = std::find(cut.begin(), cut.end(), row.n) != cut.end();
    const bool want_usr = std::find(non_usr.begin(), non_usr.end(), row.n) == non_usr.end();
    if (row.cut != want_cut)
      issues.push_back("n = " + std::to_string(row.n) + ": cut is " + (row.cut ? "true" : "false"));
    if (row.usr != want_usr)
      issues.push_back("n = " + std::to_string(row.n) + ": usr is " + (row.usr ? "true" : "false"));
  }
  return issues;
}

std::vector<SylowRecord> sylow_heritage(const FiniteGroup& g, const GroupReport& report, bool symmetric) {
  if (!report.flags.cut)
    throw NotApplicable("Sylow inheritance applies to cut groups");
  std::vector<SylowRecord> out;
  for (std::uint64_t p : {2, 3}) {
    if (g.order() % p != 0)
      continue;
    const Subgroup in_g = sylow_subgroup_in(g, p);
    const FiniteGroup sp = as_group(in_g);
    const ClassTable t = conjugacy_classes(sp);
    SylowRecord rec{p, sp.order(), classify_virtual(t, {}).flags.cut, {}};
    if (is_normal(in_g))
      rec.hypotheses.push_back("normal");
    if (is_abelian(in_g))
      rec.hypotheses.push_back("abelian");
    if (g.order() % 2 == 1)
      rec.hypotheses.push_back("odd_order");
    if (symmetric)
      rec.hypotheses.push_back("symmetric");
    out.push_back(std::move(rec));
  }
  return out;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> c;
    auto add = [&c](const char* family, GroupSpec s) { c.push_back({family, std::move(s)}); };
    for (std::vector<std::uint64_t> inv : std::vector<std::vector<std::uint64_t>>{
             {1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {10}, {12}, {15}, {24}, {2, 2}, {2, 4}, {2, 6},
             {3, 3}, {4, 4}, {2, 2, 2}, {3, 6}, {6, 6}, {2, 2, 6}})
      add("abelian", make_abelian(inv));
    for (const char* id : {"D6", "D8", "D10", "D12", "D14", "D16", "D18", "D20", "D24"})
      add("dihedral", make_named(id));
    for (const char* id : {"Q8", "Q12", "Q16", "Q20", "Q24", "Q32"})
      add("quaternion", make_named(id));
    for (MetacyclicParams p : std::vector<MetacyclicParams>{{7, 3, 7, 2}, {9, 3, 9, 4}, {8, 2, 8, 3}, {8, 2, 8, 5},
                                                            {8, 4, 4, 3}, {12, 4, 6, 11}, {13, 6, 13, 4},
                                                            {21, 6, 21, 5}, {5, 4, 5, 2}, {13, 3, 13, 3},
                                                            {7, 6, 7, 3}, {28, 6, 14, 3}})
      add("metacyclic", make_metacyclic(p.n, p.t, p.l, p.r));
    add("abelian_by_cyclic", make_named("G1"));
    add("abelian_by_cyclic", make_named("G2"));
    auto prod = [&add](GroupSpec a, GroupSpec b) { add("product", make_product({std::move(a), std::move(b)})); };
    prod(make_abelian({3}), make_abelian({4}));
    prod(make_named("Q8"), make_abelian({3}));
    prod(make_named("Q8"), make_abelian({2}));
    prod(make_named("Sym(3)"), make_abelian({3}));
    prod(make_named("Sym(3)"), make_named("Sym(3)"));
    prod(make_named("D10"), make_abelian({2}));
    prod(make_named("Alt(4)"), make_abelian({2}));
    prod(make_named("Sym(4)"), make_abelian({2}));
    prod(make_metacyclic(7, 3, 7, 2), make_abelian({3}));
    prod(make_named("Alt(5)"), make_abelian({2}));
    prod(make_named("Q8"), make_named("Q8"));
    prod(make_named("D8"), make_abelian({4}));
    for (const char* id : {"Sym(2)", "Sym(3)", "Sym(4)", "Sym(5)", "Sym(6)", "Alt(4)", "Alt(5)", "Alt(6)"})
      add("symmetric", make_named(id));
    for (const char* id : {"Alt(7)", "Sym(7)", "Alt(8)", "Sym(8)", "Alt(9)", "Sym(9)"})
      add("symmetric_extended", make_named(id));
    return c;
  }();
  return entries;
}

std::vector<CorpusEntry> corpus_up_to(std::uint64_t max_order) {
  std::vector<CorpusEntry> out;
  for (const auto& e : corpus()) {
    if (predicted_order(e.spec).value_or(0) <= max_order)
      out.push_back(e);
  }
  return out;
}

} // namespace cutgroups
