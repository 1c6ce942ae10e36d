#include "cutgroups/class_table.hpp"

#include <algorithm>
#include <map>

namespace cutgroups {

ClassTable conjugacy_classes(const FiniteGroup& g) {
  ClassTable t;
  const std::uint64_t n = g.order();
  t.group_order = n;
  t.exponent = g.exponent();
  t.class_of.assign(n, UINT32_MAX);
  const auto& gens = g.generators();
  std::vector<Elem> queue;
  for (Elem x = 0; x < n; ++x) {
    if (t.class_of[x] != UINT32_MAX)
      continue;
    const auto k = static_cast<std::uint32_t>(t.reps.size());
    t.reps.push_back(x);
    t.class_of[x] = k;
    queue.assign(1, x);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Elem s : gens) {
        Elem y = g.conj(queue[head], s);
        if (t.class_of[y] == UINT32_MAX) {
          t.class_of[y] = k;
          queue.push_back(y);
        }
      }
    }
    t.sizes.push_back(queue.size());
    t.rep_order.push_back(g.elem_order(x));
  }
  const std::size_t c = t.reps.size();
  t.inverse_class.resize(c);
  t.power_maps.resize(c);
  for (std::size_t k = 0; k < c; ++k) {
    t.inverse_class[k] = t.class_of[g.inv(t.reps[k])];
    auto& pm = t.power_maps[k];
    pm.resize(t.rep_order[k]);
    Elem p = 0;
    for (std::uint32_t j = 0; j < t.rep_order[k]; ++j) {
      pm[j] = t.class_of[p];
      p = g.mul(p, t.reps[k]);
    }
  }
  std::map<std::uint32_t, int> seen;
  t.labels.resize(c);
  for (std::size_t k = 0; k < c; ++k) {
    int idx = seen[t.rep_order[k]]++;
    std::string suffix;
    do {
      suffix.insert(suffix.begin(), static_cast<char>('a' + idx % 26));
      idx = idx / 26 - 1;
    } while (idx >= 0);
    t.labels[k] = std::to_string(t.rep_order[k]) + suffix;
  }
  return t;
}

std::vector<std::uint64_t> element_orders_present(const ClassTable& t) {
  std::vector<std::uint64_t> orders(t.rep_order.begin(), t.rep_order.end());
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  return orders;
}

} // namespace cutgroups
