// Galois action on conjugacy classes and fields of the form Q(zeta_m)^H.

#ifndef CUTGROUPS_GALOIS_HPP_
#define CUTGROUPS_GALOIS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "cutgroups/class_table.hpp"

namespace cutgroups {

// A subgroup of (Z/mZ)^x. For m = 1 the single residue is 0.
struct UnitSubgroup {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> residues;

  std::size_t size() const { return residues.size(); }
  bool contains(std::uint64_t j) const;
  // [ (Z/mZ)^x : H ]
  std::uint64_t index() const;
  bool operator==(const UnitSubgroup&) const = default;
};

UnitSubgroup full_unit_group(std::uint64_t m);
// Subgroup generated by gens (reduced mod m).
UnitSubgroup generated_units(std::uint64_t m, const std::vector<std::uint64_t>& gens);
UnitSubgroup intersect(const UnitSubgroup& a, const UnitSubgroup& b);

struct FieldId {
  enum class Kind { Rationals, Quadratic, HigherDegree };
  Kind kind = Kind::Rationals;
  std::int64_t d = 1;          // squarefree, meaningful for Quadratic
  std::uint64_t degree = 1;

  static FieldId rationals() { return {}; }
  static FieldId quadratic(std::int64_t d) { return {Kind::Quadratic, d, 2}; }
  static FieldId higher(std::uint64_t n) { return {Kind::HigherDegree, 1, n}; }
  bool operator==(const FieldId&) const = default;
  std::string str() const;
};

// Kronecker symbol (d | n).
int kronecker_symbol(std::int64_t d, std::int64_t n);
// d for squarefree d != 0, 1: d if d = 1 mod 4, else 4d.
std::int64_t quadratic_discriminant(std::int64_t d);

// Fixed field of h inside Q(zeta_m).
FieldId fixed_field_id(const UnitSubgroup& h);

// {j coprime to |x| : x^j ~ x} for x = rep_k.
UnitSubgroup stabilizer_units(const ClassTable& t, std::uint32_t k);
FieldId element_field(const ClassTable& t, std::uint32_t k);

struct GaloisPartition {
  std::vector<std::uint32_t> block_of;  // blocks numbered by their least class
  std::size_t num_blocks = 0;
  std::vector<std::vector<std::uint32_t>> blocks() const;
};

enum class PowerRange {
  ElementOrder,  // j coprime to |x|
  GroupOrder,    // j coprime to |G|
};

GaloisPartition q_class_partition(const ClassTable& t, PowerRange range = PowerRange::ElementOrder);
GaloisPartition r_class_partition(const ClassTable& t);

// {j mod e : x^j ~ x for every x}; its fixed field is Q(G).
UnitSubgroup class_field_units(const ClassTable& t);

} // namespace cutgroups

#endif // CUTGROUPS_GALOIS_HPP_
