// Conjugacy classes and power maps.

#ifndef CUTGROUPS_CLASS_TABLE_HPP_
#define CUTGROUPS_CLASS_TABLE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "cutgroups/arith.hpp"
#include "cutgroups/finite_group.hpp"

namespace cutgroups {

// Class-level data of a group. Tables built from a realized FiniteGroup
// carry reps and class_of; virtual tables (large Sym/Alt) leave both empty.
struct ClassTable {
  Count group_order = 1;
  std::uint64_t exponent = 1;
  std::vector<std::uint32_t> rep_order;
  std::vector<Count> sizes;
  std::vector<std::uint32_t> inverse_class;
  // power_maps[k][j] = class of rep_k^j for 0 <= j < rep_order[k].
  std::vector<std::vector<std::uint32_t>> power_maps;
  std::vector<std::string> labels;

  std::vector<Elem> reps;
  std::vector<std::uint32_t> class_of;

  std::size_t num_classes() const { return rep_order.size(); }
  bool is_virtual() const { return reps.empty(); }
  std::uint32_t power_class(std::uint32_t k, std::int64_t j) const {
    return power_maps[k][mod_floor(j, rep_order[k])];
  }
};

// Orbits of the conjugation action; each representative is the least
// element index in its class and classes are listed by representative.
ClassTable conjugacy_classes(const FiniteGroup& g);

// Distinct element orders, ascending.
std::vector<std::uint64_t> element_orders_present(const ClassTable& t);

} // namespace cutgroups

#endif // CUTGROUPS_CLASS_TABLE_HPP_
