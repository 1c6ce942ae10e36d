// Character tables by the Dixon-Schneider method, with exact cyclotomic values.

#ifndef CUTGROUPS_CHAR_TABLE_HPP_
#define CUTGROUPS_CHAR_TABLE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cutgroups/class_table.hpp"
#include "cutgroups/cyclotomic.hpp"
#include "cutgroups/finite_group.hpp"
#include "cutgroups/galois.hpp"

namespace cutgroups {

struct CharacterTable {
  std::shared_ptr<const ClassTable> classes;
  std::uint64_t prime = 0;
  std::uint64_t conductor = 1;  // group exponent
  std::vector<std::uint64_t> degrees;
  // values[chi][k] = chi(rep_k) in Q(zeta_e)
  std::vector<std::vector<Cyclotomic>> values;
  // roots[chi][k][s] = multiplicity of zeta_o^s among the eigenvalues of rep_k, o = |rep_k|
  std::vector<std::vector<std::vector<std::uint32_t>>> roots;

  std::size_t size() const { return degrees.size(); }
};

// a[i][j][k] = #{(u, v) in C_i x C_j : uv = rep_k}
using ClassConstants = std::vector<std::vector<std::vector<std::uint64_t>>>;
ClassConstants class_constants(const FiniteGroup& g, const ClassTable& t);

// Least prime p = 1 (mod e) with p > 2 * ceil(sqrt(order)), searched below 2^20.
std::uint64_t default_dixon_prime(Count order, std::uint64_t exponent);
// The valid prime following `after` under the same policy.
std::uint64_t next_dixon_prime(Count order, std::uint64_t exponent, std::uint64_t after);

// Characters are sorted by degree, then by their value vectors.
// prime overrides the default choice and must satisfy the same policy.
CharacterTable dixon_table(const FiniteGroup& g, const ClassTable& t,
                           std::optional<std::uint64_t> prime = std::nullopt);

// Exact row and column orthogonality.
bool orthogonality_holds(const CharacterTable& ct);

UnitSubgroup char_stabilizer(const CharacterTable& ct, std::size_t chi);
FieldId char_field(const CharacterTable& ct, std::size_t chi);
bool char_is_real(const CharacterTable& ct, std::size_t chi);

struct GroupField {
  UnitSubgroup units;
  std::uint64_t degree = 1;
  FieldId field;
};
GroupField group_field(const CharacterTable& ct);

struct FieldCounts {
  std::uint64_t real = 0;
  std::uint64_t rational = 0;
  std::uint64_t quadratic = 0;
  bool operator==(const FieldCounts&) const = default;
};
FieldCounts char_field_counts(const CharacterTable& ct);
FieldCounts class_field_counts(const ClassTable& t);

struct CountsRecord {
  FieldCounts chars;
  FieldCounts classes;
};
CountsRecord field_counts(const CharacterTable& ct, const ClassTable& t);

} // namespace cutgroups

#endif // CUTGROUPS_CHAR_TABLE_HPP_
