// Rationality classes, the uniform semi-rational residue set, the rank of
// the central unit group, and central height.

#ifndef CUTGROUPS_CLASSIFIERS_HPP_
#define CUTGROUPS_CLASSIFIERS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cutgroups/char_table.hpp"
#include "cutgroups/class_table.hpp"
#include "cutgroups/finite_group.hpp"
#include "cutgroups/galois.hpp"
#include "cutgroups/gk_graph.hpp"

namespace cutgroups {

struct ElementRationality {
  std::uint32_t class_index = 0;
  std::uint32_t order = 1;
  UnitSubgroup stabilizer;
  FieldId field;
  bool rational = false;
  bool inverse_semirational = false;
  bool semirational = false;
  // m mod |x| with every generator of <x> in C_x or C_{x^m}
  std::vector<std::uint32_t> partners;
};

ElementRationality element_rationality(const ClassTable& t, std::uint32_t k);

// Residues m for which the group is m semi-rational. Membership depends only
// on m mod period, where period is the lcm of the orders of the non-rational
// classes (1 for rational groups, so every m qualifies).
struct UsrSet {
  std::uint64_t period = 1;
  std::uint64_t count = 0;  // residues mod period
  // Listed when period is small enough to scan.
  std::optional<std::vector<std::uint64_t>> residues;
  std::optional<std::uint64_t> least;

  bool empty() const { return count == 0; }
  bool contains(std::int64_t m) const;
  // Every residue mod `modulus`, which must be a multiple of period.
  std::vector<std::uint64_t> lift(std::uint64_t modulus) const;
  // Per-class admissible residues, kept for membership tests.
  std::vector<std::pair<std::uint64_t, std::vector<bool>>> constraints;
};

inline constexpr std::uint64_t kUsrListPeriodLimit = std::uint64_t{1} << 22;

UsrSet usr_values(const ClassTable& t);

// Q(G) computed from the power maps alone.
struct ClassGroupField {
  std::uint64_t modulus = 1;  // lcm of non-rational class orders
  std::uint64_t degree = 1;
  FieldId field;
};
ClassGroupField class_group_field(const ClassTable& t);

std::uint64_t rank_rho(const ClassTable& t);

bool q_star_detect(const FiniteGroup& g);
std::uint32_t central_height(bool q_star, bool cut, Count center_size);
Count center_size(const ClassTable& t);

struct FastCutChecks {
  std::optional<bool> odd_order;
  std::optional<bool> two_group;
  std::optional<bool> three_group;
};
// Throws NotApplicable unless |G| is odd or a power of 2.
FastCutChecks fast_cut_checks(const ClassTable& t);
FastCutChecks fast_cut_checks(const FiniteGroup& g);

struct StructureFlags {
  std::optional<bool> abelian;
  std::optional<bool> nilpotent;
  std::optional<bool> solvable;
};

struct RationalityFlags {
  bool rational = false;
  bool cut = false;
  bool semirational = false;
  bool usr = false;
  std::optional<bool> quadratic_rational;
  std::optional<bool> qsr;
};

struct ValidatorResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct GroupReport {
  std::string spec;
  Count order = 1;
  std::uint64_t exponent = 1;
  std::vector<std::uint64_t> primes;
  RationalityFlags flags;
  UsrSet usr_m_set;
  std::uint64_t rho = 0;
  std::uint32_t central_height = 0;
  bool q_star = false;
  FieldId group_field;
  std::uint64_t group_field_degree = 1;
  FieldCounts class_counts;
  std::optional<FieldCounts> char_counts;
  GKGraph gk;
  std::optional<char> figure1_label;
  StructureFlags structure;
  // Orders of non-rational elements, ascending.
  std::vector<std::uint64_t> nonrational_orders;
  std::vector<ValidatorResult> validators;

  bool all_valid() const;
};

struct ClassifyOptions {
  std::optional<std::uint64_t> dixon_prime;
  // Character tables are only built up to this order.
  std::uint64_t char_table_cap = 400'000;
  // Also test the cut property with exponents coprime to |G|.
  bool e4_crosscheck = true;
};

GroupReport classify(const FiniteGroup& g, const ClassifyOptions& opts = {});
// Same, reusing prebuilt tables.
GroupReport classify(const FiniteGroup& g, const ClassTable& t, const CharacterTable* ct,
                     const ClassifyOptions& opts = {});
// Tables without a realized group: q_star is false and the character flags are unknown.
GroupReport classify_virtual(const ClassTable& t, const StructureFlags& structure);

} // namespace cutgroups

#endif // CUTGROUPS_CLASSIFIERS_HPP_
