#include "cutgroups/gk_graph.hpp"

#include <algorithm>

namespace cutgroups {

std::string GKGraph::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i)
    out += (i ? "," : "") + std::to_string(vertices[i]);
  out += "}";
  for (auto [p, q] : edges)
    out += " " + std::to_string(p) + "-" + std::to_string(q);
  return out;
}

GKGraph make_gk_graph(std::vector<std::uint64_t> vertices, std::vector<std::pair<std::uint64_t, std::uint64_t>> edges) {
  for (auto& [p, q] : edges) {
    if (p > q)
      std::swap(p, q);
  }
  std::sort(vertices.begin(), vertices.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {std::move(vertices), std::move(edges)};
}

GKGraph gk_graph(const ClassTable& t) {
  auto primes = prime_divisors(t.group_order);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (std::size_t a = 0; a < primes.size(); ++a) {
    for (std::size_t b = a + 1; b < primes.size(); ++b) {
      const std::uint64_t pq = primes[a] * primes[b];
      bool found = std::any_of(t.rep_order.begin(), t.rep_order.end(), [pq](std::uint32_t o) { return o % pq == 0; });
      if (found)
        edges.emplace_back(primes[a], primes[b]);
    }
  }
  return make_gk_graph(std::move(primes), std::move(edges));
}

GKGraph gk_graph(const FiniteGroup& g) {
  std::vector<std::uint32_t> orders;
  for (Elem x = 0; x < g.order(); ++x)
    orders.push_back(g.elem_order(x));
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  ClassTable t;
  t.group_order = g.order();
  t.rep_order = std::move(orders);
  return gk_graph(t);
}

const std::vector<CatalogGraph>& figure1_catalog() {
  static const std::vector<CatalogGraph> catalog = [] {
    using E = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
    std::vector<CatalogGraph> c;
    auto add = [&c](char label, std::vector<std::uint64_t> v, E e, bool open = false) {
      c.push_back({label, make_gk_graph(std::move(v), std::move(e)), open});
    };
    add('a', {2}, {});
    add('b', {3}, {});
    add('c', {2, 3}, {});
    add('d', {2, 3}, {{2, 3}});
    add('e', {2, 5}, {});
    add('f', {2, 5}, {{2, 5}});
    add('g', {3, 7}, {});
    add('h', {2, 3, 5}, {{2, 3}});
    add('i', {2, 3, 5}, {{2, 3}, {2, 5}});
    add('j', {2, 3, 5}, {{2, 3}, {3, 5}});
    add('k', {2, 3, 5}, {{2, 3}, {2, 5}, {3, 5}});
    add('l', {2, 3, 7}, {{2, 3}});
    add('m', {2, 3, 7}, {{2, 3}, {2, 7}});
    add('n', {2, 3, 7}, {{2, 3}, {3, 7}});
    add('o', {2, 3, 7}, {{2, 3}, {2, 7}, {3, 7}});
    add('p', {2, 3, 5, 7}, {{2, 3}, {2, 7}, {3, 5}, {5, 7}});
    add('q', {2, 3, 5, 7}, {{2, 3}, {2, 5}, {2, 7}, {3, 5}, {5, 7}});
    add('r', {2, 3, 5, 7}, {{2, 3}, {2, 5}, {2, 7}, {3, 5}, {3, 7}, {5, 7}});
    add('s', {2, 3, 5, 7}, {{2, 3}, {2, 7}, {3, 5}, {3, 7}}, true);
    add('t', {2, 3, 5, 7}, {{2, 3}, {2, 5}, {2, 7}, {3, 5}}, true);
    add('u', {2, 3, 5, 7}, {{2, 3}, {2, 7}, {3, 5}, {3, 7}, {5, 7}}, true);
    add('v', {2, 3, 5, 7}, {{2, 3}, {2, 5}, {2, 7}, {3, 5}, {3, 7}}, true);
    return c;
  }();
  return catalog;
}

std::optional<CatalogGraph> figure1_lookup(const GKGraph& g) {
  for (const auto& entry : figure1_catalog()) {
    if (entry.graph == g)
      return entry;
  }
  return std::nullopt;
}

} // namespace cutgroups
