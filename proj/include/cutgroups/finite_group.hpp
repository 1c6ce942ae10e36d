// Enumerated finite groups and their structural primitives.
//
// Every group is realized eagerly: elements are indexed 0..order-1 in the
// backend's normal-form lexicographic order, index 0 is the identity, and
// multiplication is delegated to the backend. Inverses and element orders
// are tabulated at construction.

#ifndef CUTGROUPS_FINITE_GROUP_HPP_
#define CUTGROUPS_FINITE_GROUP_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cutgroups/group_spec.hpp"

namespace cutgroups {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kDefaultOrderCap = 1'000'000;

class GroupBackend {
public:
  virtual ~GroupBackend() = default;
  virtual std::uint64_t size() const = 0;
  virtual Elem multiply(Elem a, Elem b) const = 0;
  virtual std::vector<Elem> generators() const = 0;
  virtual std::string tag() const = 0;
  virtual std::string describe(Elem x) const;
};

class FiniteGroup {
public:
  FiniteGroup() = default;
  explicit FiniteGroup(std::shared_ptr<const GroupBackend> backend);

  std::uint64_t order() const { return data_->order.size(); }
  std::uint64_t exponent() const { return data_->exponent; }
  Elem identity() const { return 0; }

  Elem mul(Elem a, Elem b) const { return data_->backend->multiply(a, b); }
  Elem inv(Elem x) const { return data_->inverse[x]; }
  std::uint32_t elem_order(Elem x) const { return data_->order[x]; }
  Elem pow(Elem x, std::int64_t j) const;
  // g^-1 x g
  Elem conj(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }
  // a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  const std::vector<Elem>& generators() const { return data_->generators; }
  std::string tag() const { return data_->backend->tag(); }
  std::string describe(Elem x) const { return data_->backend->describe(x); }
  const GroupBackend& backend() const { return *data_->backend; }
  std::shared_ptr<const GroupBackend> backend_ptr() const { return data_->backend; }

private:
  struct Data {
    std::shared_ptr<const GroupBackend> backend;
    std::vector<Elem> inverse;
    std::vector<std::uint32_t> order;
    std::vector<Elem> generators;
    std::uint64_t exponent = 1;
  };
  std::shared_ptr<const Data> data_;
};

struct Subgroup {
  FiniteGroup parent;
  std::vector<Elem> elements;  // sorted ascending
  std::vector<Elem> generators;

  std::size_t size() const { return elements.size(); }
  bool contains(Elem x) const;
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

// Builds the group described by spec. Throws InvalidSpec when parameter
// relations fail (checked on the spec and audited on the realized
// elements) and OrderCapExceeded when the order would exceed cap.
FiniteGroup realize(const GroupSpec& spec, std::uint64_t cap = kDefaultOrderCap);

Subgroup whole_group(const FiniteGroup& g);
Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> gens);
// Smallest subgroup containing seeds that is normalized by every element of ambient.
Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> ambient_gens,
                        std::span<const Elem> seeds);

Subgroup centralizer(const FiniteGroup& g, Elem x);
Subgroup cyclic_normalizer(const FiniteGroup& g, Elem x);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
Subgroup center(const FiniteGroup& g);
Subgroup commutator_subgroup(const FiniteGroup& g);

bool is_abelian(const Subgroup& h);
bool is_normal(const Subgroup& h);

struct SolvabilityFlags {
  bool is_abelian = false;
  bool is_nilpotent = false;
  bool is_solvable = false;
};
SolvabilityFlags solvability_flags(const FiniteGroup& g);

// A Sylow p-subgroup inside g. Throws PNotDividing if p does not divide |g|.
Subgroup sylow_subgroup_in(const FiniteGroup& g, std::uint64_t p);
FiniteGroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p);

std::vector<Subgroup> index_two_subgroups(const FiniteGroup& g);
std::vector<Subgroup> index_two_abelian_subgroups(const FiniteGroup& g);

// Re-realizes a subgroup as a standalone group.
FiniteGroup as_group(const Subgroup& h);
// G/N for a normal subgroup N; cosets are indexed by their least element.
FiniteGroup quotient(const Subgroup& normal);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           std::uint64_t cap = kDefaultOrderCap);

// Image list (0-based) of an element of a permutation-backed group, and the
// reverse lookup. Throw NotApplicable for other backends.
std::vector<std::uint32_t> permutation_images(const FiniteGroup& g, Elem x);
Elem permutation_element(const FiniteGroup& g, const std::vector<std::uint32_t>& images);

} // namespace cutgroups

#endif // CUTGROUPS_FINITE_GROUP_HPP_
