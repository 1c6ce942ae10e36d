#include "cutgroups/report_json.hpp"

#include <limits>
#include <sstream>

#include "cutgroups/arith.hpp"

namespace cutgroups {

namespace {

Json optional_bool(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

std::string optional_text(const std::optional<bool>& v) {
  if (!v)
    return "not computed";
  return *v ? "yes" : "no";
}

} // namespace

Json count_json(Count value) {
  if (value <= std::numeric_limits<std::uint64_t>::max())
    return Json(static_cast<std::uint64_t>(value));
  return Json(to_string(value));
}

Json flags_json(const RationalityFlags& f) {
  Json j = Json::object();
  j["rational"] = f.rational;
  j["cut"] = f.cut;
  j["semirational"] = f.semirational;
  j["usr"] = f.usr;
  j["quadratic_rational"] = optional_bool(f.quadratic_rational);
  j["qsr"] = optional_bool(f.qsr);
  return j;
}

Json usr_json(const UsrSet& u) {
  Json j = Json::object();
  j["period"] = u.period;
  j["count"] = u.count;
  j["residues"] = u.residues ? Json(*u.residues) : Json(nullptr);
  return j;
}

Json gk_json(const GKGraph& g, std::optional<char> label) {
  Json j = Json::object();
  j["vertices"] = g.vertices;
  Json edges = Json::array();
  for (auto [p, q] : g.edges)
    edges.push_back(Json::array({p, q}));
  j["edges"] = std::move(edges);
  if (label)
    j["figure1_label"] = std::string(1, *label);
  return j;
}

Json report_json(const GroupReport& r) {
  Json j = Json::object();
  j["spec"] = r.spec;
  j["order"] = count_json(r.order);
  j["exponent"] = r.exponent;
  j["primes"] = r.primes;
  j["flags"] = flags_json(r.flags);
  j["usr_m_set"] = usr_json(r.usr_m_set);
  j["rho"] = r.rho;
  j["central_height"] = r.central_height;
  j["q_star"] = r.q_star;
  Json gf = Json::object();
  gf["degree"] = r.group_field_degree;
  if (r.group_field.kind == FieldId::Kind::Quadratic)
    gf["quadratic_d"] = r.group_field.d;
  j["group_field"] = std::move(gf);
  Json counts = Json::object();
  auto pair = [&r](std::uint64_t FieldCounts::*member) {
    Json p = Json::object();
    p["chars"] = r.char_counts ? Json((*r.char_counts).*member) : Json(nullptr);
    p["classes"] = r.class_counts.*member;
    return p;
  };
  counts["real"] = pair(&FieldCounts::real);
  counts["rational"] = pair(&FieldCounts::rational);
  counts["quadratic"] = pair(&FieldCounts::quadratic);
  j["counts"] = std::move(counts);
  j["gk_graph"] = gk_json(r.gk, r.figure1_label);
  Json validators = Json::array();
  for (const auto& v : r.validators) {
    Json e = Json::object();
    e["name"] = v.name;
    e["ok"] = v.ok;
    e["detail"] = v.detail;
    validators.push_back(std::move(e));
  }
  j["validators"] = std::move(validators);
  j["timings"] = nullptr;
  return j;
}

Json survey_row_json(const SurveyRow& row) {
  Json j = Json::object();
  j["spec"] = render_spec(row.spec);
  Json fp = Json::object();
  fp["order"] = count_json(row.fingerprint.order);
  fp["exponent"] = row.fingerprint.exponent;
  Json sizes = Json::array();
  for (Count c : row.fingerprint.class_sizes)
    sizes.push_back(count_json(c));
  fp["class_sizes"] = std::move(sizes);
  Json hist = Json::array();
  for (auto [o, c] : row.fingerprint.order_histogram)
    hist.push_back(Json::array({Json(o), count_json(c)}));
  fp["order_histogram"] = std::move(hist);
  j["fingerprint"] = std::move(fp);
  j["verdicts"] = flags_json(row.verdicts);
  j["usr_m_set"] = usr_json(row.usr_m_set);
  j["notes"] = row.notes;
  return j;
}

Json alternating_row_json(const AlternatingRow& row) {
  Json j = Json::object();
  j["n"] = row.n;
  j["cut"] = row.cut;
  j["usr"] = row.usr;
  j["semirational"] = row.semirational;
  j["usr_m_set"] = usr_json(row.usr_m_set);
  return j;
}

std::string report_text(const GroupReport& r) {
  std::ostringstream os;
  os << "group            " << r.spec << "\n";
  os << "order            " << to_string(r.order) << "\n";
  os << "exponent         " << r.exponent << "\n";
  os << "primes          ";
  for (auto p : r.primes)
    os << " " << p;
  os << "\n";
  os << "rational         " << (r.flags.rational ? "yes" : "no") << "\n";
  os << "cut              " << (r.flags.cut ? "yes" : "no") << "\n";
  os << "semi-rational    " << (r.flags.semirational ? "yes" : "no") << "\n";
  os << "uniformly s.r.   " << (r.flags.usr ? "yes" : "no") << "\n";
  os << "quadratic ratl.  " << optional_text(r.flags.quadratic_rational) << "\n";
  os << "q.s.r.           " << optional_text(r.flags.qsr) << "\n";
  os << "usr m mod " << r.usr_m_set.period << "    ";
  if (r.usr_m_set.empty()) {
    os << " none";
  } else if (r.usr_m_set.residues) {
    for (auto m : *r.usr_m_set.residues)
      os << " " << m;
  } else {
    os << " (" << r.usr_m_set.count << " residues, not listed)";
  }
  os << "\n";
  os << "rho              " << r.rho << "\n";
  os << "central height   " << r.central_height << (r.q_star ? " (Q* pair found)" : "") << "\n";
  os << "group field      " << r.group_field.str() << "\n";
  auto opt = [](const std::optional<FieldCounts>& c, std::uint64_t FieldCounts::*m) {
    return c ? std::to_string((*c).*m) : std::string("-");
  };
  os << "counts (chars/classes)  real " << opt(r.char_counts, &FieldCounts::real) << "/" << r.class_counts.real
     << "  rational " << opt(r.char_counts, &FieldCounts::rational) << "/" << r.class_counts.rational
     << "  quadratic " << opt(r.char_counts, &FieldCounts::quadratic) << "/" << r.class_counts.quadratic << "\n";
  os << "prime graph      " << r.gk.str();
  if (r.figure1_label)
    os << "  (catalog " << *r.figure1_label << ")";
  os << "\n";
  std::size_t failed = 0;
  for (const auto& v : r.validators)
    failed += !v.ok;
  os << "validators       " << r.validators.size() - failed << "/" << r.validators.size() << " ok\n";
  for (const auto& v : r.validators) {
    if (!v.ok)
      os << "  FAILED " << v.name << ": " << v.detail << "\n";
  }
  return os.str();
}

} // namespace cutgroups
