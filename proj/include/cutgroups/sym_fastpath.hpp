// Class-level data of Sym(n) and Alt(n) from cycle types, for n <= 22.

#ifndef CUTGROUPS_SYM_FASTPATH_HPP_
#define CUTGROUPS_SYM_FASTPATH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "cutgroups/class_table.hpp"

namespace cutgroups {

inline constexpr std::uint32_t kMaxFastpathDegree = 22;

// Parts in descending order.
using CycleType = std::vector<std::uint32_t>;

enum class SplitTag { Whole, Plus, Minus };

struct AltClassLabel {
  CycleType type;
  SplitTag tag = SplitTag::Whole;
  bool operator==(const AltClassLabel&) const = default;
};

// All partitions of n, starting with 1^n and ending with (n).
std::vector<CycleType> partitions(std::uint32_t n);

bool is_even_type(const CycleType& t);
std::uint64_t type_order(const CycleType& t);
// True iff all parts are odd and pairwise distinct.
bool an_class_splits(const CycleType& t);
// Cycles on consecutive points, largest part first (0-based images).
std::vector<std::uint32_t> canonical_representative(const CycleType& t);
CycleType cycle_type_of(const std::vector<std::uint32_t>& images);

// Class of x^j for x in the class `label`; requires gcd(j, |x|) = 1.
AltClassLabel alt_power_class(const AltClassLabel& label, std::int64_t j);

std::string label_text(const AltClassLabel& label);

// Labels in table order: even types in partitions() order, Plus before Minus.
std::vector<AltClassLabel> alt_class_labels(std::uint32_t n);

// Virtual tables; throw NOutOfRange unless 1 <= n <= 22.
ClassTable alt_class_table(std::uint32_t n);
ClassTable sym_class_table(std::uint32_t n);

} // namespace cutgroups

#endif // CUTGROUPS_SYM_FASTPATH_HPP_
