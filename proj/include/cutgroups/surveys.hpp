// Table reproductions: the analysis pipeline, prime-spectrum validators,
// direct-product predictions, the metacyclic and alternating surveys and
// Sylow inheritance.

#ifndef CUTGROUPS_SURVEYS_HPP_
#define CUTGROUPS_SURVEYS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cutgroups/classifiers.hpp"
#include "cutgroups/gk_graph.hpp"
#include "cutgroups/group_spec.hpp"

namespace cutgroups {

struct AnalyzeOptions {
  std::uint64_t cap = kDefaultOrderCap;
  std::optional<std::uint64_t> dixon_prime;
};

// Realizes (or, for large Sym/Alt, builds the class table of) spec and
// classifies it. Spectrum violations are appended to the validators.
GroupReport analyze(const GroupSpec& spec, const AnalyzeOptions& opts = {});

// Named constraint violations; empty when the report is consistent.
std::vector<std::string> spectrum_validate(const GroupReport& report, const StructureFlags& structure);

enum class GroupClass { Cut, USR, QSR, SR, QR };
const char* class_name(GroupClass x);
// nullopt when the needed flag was not computed.
std::optional<bool> in_class(const GroupReport& report, GroupClass x);

bool predict_product(const GroupReport& a, const GroupReport& b, GroupClass x);
// For two cut groups: every gcd of non-rational element orders lies in {3,4,6}.
bool cut_product_gcd_criterion(const GroupReport& a, const GroupReport& b);
bool verify_product(const GroupSpec& a, const GroupSpec& b, GroupClass x, const AnalyzeOptions& opts = {});

struct Fingerprint {
  Count order = 1;
  std::uint64_t exponent = 1;
  std::vector<Count> class_sizes;                                  // ascending
  std::vector<std::pair<std::uint64_t, Count>> order_histogram;    // (order, #elements)
  bool rational = false, cut = false, semirational = false, usr = false;
  std::optional<bool> quadratic_rational;

  bool operator==(const Fingerprint&) const = default;
  bool operator<(const Fingerprint& o) const;
};
Fingerprint fingerprint(const ClassTable& t, const GroupReport& report);

struct SurveyRow {
  GroupSpec spec;
  Fingerprint fingerprint;
  RationalityFlags verdicts;
  UsrSet usr_m_set;
  std::string notes;
};

struct MetacyclicParams {
  std::uint64_t n, t, l, r;
};
// Non-abelian parameter tuples with t in {2,3,4,6} and phi(n) in {1,2,4,6,8,12}.
std::vector<MetacyclicParams> metacyclic_search_space();

struct MetacyclicSurvey {
  // Every realized tuple with its report, in enumeration order.
  std::vector<std::pair<MetacyclicParams, GroupReport>> all;
  // Semi-rational, non-cut rows deduplicated by fingerprint.
  std::vector<SurveyRow> rows;
  bool fingerprint_collision = false;
};
MetacyclicSurvey metacyclic_sr_survey();

struct PaperMetacyclicEntry {
  MetacyclicParams params;
  std::optional<std::uint64_t> m;
};
const std::vector<PaperMetacyclicEntry>& paper_metacyclic_table();
// Mismatches between survey rows and the published table.
std::vector<std::string> compare_metacyclic_with_paper(const MetacyclicSurvey& survey);

struct AlternatingRow {
  std::uint32_t n;
  bool cut;
  bool usr;
  bool semirational;
  UsrSet usr_m_set;
};
std::vector<AlternatingRow> alternating_survey(std::uint32_t max_n);
const std::vector<std::uint32_t>& paper_alternating_cut_list();
// n <= 22 except these.
const std::vector<std::uint32_t>& paper_alternating_non_usr_list();
std::vector<std::string> compare_alternating_with_paper(const std::vector<AlternatingRow>& rows);

struct SylowRecord {
  std::uint64_t p;
  std::uint64_t order;
  bool cut;
  std::vector<std::string> hypotheses;  // "normal", "abelian", "odd_order", "symmetric"
};
// Throws NotApplicable unless report says g is cut.
std::vector<SylowRecord> sylow_heritage(const FiniteGroup& g, const GroupReport& report, bool symmetric = false);

struct CorpusEntry {
  std::string family;
  GroupSpec spec;
};
// Groups of order <= 2000 across all families, plus Sym/Alt of degree 7-9.
const std::vector<CorpusEntry>& corpus();
std::vector<CorpusEntry> corpus_up_to(std::uint64_t max_order);

} // namespace cutgroups

#endif // CUTGROUPS_SURVEYS_HPP_
