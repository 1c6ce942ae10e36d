// Prime graphs and the catalog of prime graphs of solvable cut groups.

#ifndef CUTGROUPS_GK_GRAPH_HPP_
#define CUTGROUPS_GK_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutgroups/class_table.hpp"

namespace cutgroups {

struct GKGraph {
  std::vector<std::uint64_t> vertices;                           // ascending
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;    // p < q, ascending
  bool operator==(const GKGraph&) const = default;
  std::string str() const;
};

GKGraph gk_graph(const ClassTable& t);
GKGraph gk_graph(const FiniteGroup& g);
GKGraph make_gk_graph(std::vector<std::uint64_t> vertices,
                      std::vector<std::pair<std::uint64_t, std::uint64_t>> edges);

struct CatalogGraph {
  char label;
  GKGraph graph;
  bool realizability_open;
};

// Graphs (a)-(v); (s)-(v) are possible but not known to occur.
const std::vector<CatalogGraph>& figure1_catalog();
std::optional<CatalogGraph> figure1_lookup(const GKGraph& g);

} // namespace cutgroups

#endif // CUTGROUPS_GK_GRAPH_HPP_
