#include "cutgroups/sym_fastpath.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cutgroups/errors.hpp"

namespace cutgroups {

namespace {

void extend(std::uint32_t remaining, std::uint32_t max_part, CycleType& cur, std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    extend(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void check_degree(std::uint32_t n) {
  if (n < 1 || n > kMaxFastpathDegree)
    throw NOutOfRange("degree " + std::to_string(n) + " outside 1.." + std::to_string(kMaxFastpathDegree));
}

Count factorial(std::uint32_t n) {
  Count f = 1;
  for (std::uint32_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

// |C_Sym(n)(x)| for x of the given type.
Count centralizer_order(const CycleType& t) {
  std::map<std::uint32_t, std::uint32_t> mult;
  for (std::uint32_t p : t)
    ++mult[p];
  Count z = 1;
  for (auto [part, m] : mult) {
    for (std::uint32_t i = 0; i < m; ++i)
      z *= part;
    z *= factorial(m);
  }
  return z;
}

// Type of x^j: each l-cycle becomes gcd(l,j) cycles of length l/gcd(l,j).
CycleType power_type(const CycleType& t, std::uint64_t j) {
  CycleType out;
  for (std::uint32_t p : t) {
    std::uint64_t g = std::gcd<std::uint64_t>(p, j);
    for (std::uint64_t i = 0; i < g; ++i)
      out.push_back(static_cast<std::uint32_t>(p / g));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Parity of i -> i*j on Z/l.
bool multiplier_is_odd(std::uint32_t l, std::uint64_t j) {
  std::vector<char> seen(l, 0);
  std::uint32_t transpositions = 0;
  for (std::uint32_t s = 0; s < l; ++s) {
    if (seen[s])
      continue;
    std::uint32_t len = 0;
    for (std::uint32_t q = s; !seen[q]; q = static_cast<std::uint32_t>(q * j % l)) {
      seen[q] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 1;
}

std::string type_text(const CycleType& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i)
    out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

ClassTable build_table(std::uint32_t n, const std::vector<AltClassLabel>& labels, bool alternating) {
  ClassTable t;
  std::map<std::pair<CycleType, SplitTag>, std::uint32_t> index;
  for (std::size_t k = 0; k < labels.size(); ++k)
    index[{labels[k].type, labels[k].tag}] = static_cast<std::uint32_t>(k);
  const Count full = factorial(n);
  t.group_order = alternating && n >= 2 ? full / 2 : full;
  for (const auto& lab : labels) {
    const std::uint64_t o = type_order(lab.type);
    t.exponent = lcm_u(t.exponent, o);
    t.rep_order.push_back(static_cast<std::uint32_t>(o));
    Count size = full / centralizer_order(lab.type);
    if (lab.tag != SplitTag::Whole)
      size /= 2;
    t.sizes.push_back(size);
    t.labels.push_back(label_text(lab));
    std::vector<std::uint32_t> pm(o);
    for (std::uint64_t j = 0; j < o; ++j) {
      if (lab.tag != SplitTag::Whole && std::gcd(j, o) == 1) {
        auto p = alt_power_class(lab, static_cast<std::int64_t>(j));
        pm[j] = index.at({p.type, p.tag});
      } else {
        pm[j] = index.at({power_type(lab.type, j), SplitTag::Whole});
      }
    }
    t.power_maps.push_back(std::move(pm));
  }
  for (std::size_t k = 0; k < labels.size(); ++k)
    t.inverse_class.push_back(t.power_class(static_cast<std::uint32_t>(k), -1));
  return t;
}

} // namespace

std::vector<CycleType> partitions(std::uint32_t n) {
  std::vector<CycleType> out;
  CycleType cur;
  extend(n, n, cur, out);
  std::reverse(out.begin(), out.end());
  return out;
}

bool is_even_type(const CycleType& t) {
  std::uint32_t s = 0;
  for (std::uint32_t p : t)
    s += p - 1;
  return s % 2 == 0;
}

std::uint64_t type_order(const CycleType& t) {
  std::uint64_t o = 1;
  for (std::uint32_t p : t)
    o = lcm_u(o, p);
  return o;
}

bool an_class_splits(const CycleType& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] % 2 == 0)
      return false;
    for (std::size_t k = i + 1; k < t.size(); ++k) {
      if (t[i] == t[k])
        return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> canonical_representative(const CycleType& t) {
  std::uint32_t n = std::accumulate(t.begin(), t.end(), 0u);
  std::vector<std::uint32_t> img(n);
  std::uint32_t start = 0;
  for (std::uint32_t p : t) {
    for (std::uint32_t i = 0; i < p; ++i)
      img[start + i] = start + (i + 1) % p;
    start += p;
  }
  return img;
}

CycleType cycle_type_of(const std::vector<std::uint32_t>& images) {
  CycleType t;
  std::vector<char> seen(images.size(), 0);
  for (std::uint32_t s = 0; s < images.size(); ++s) {
    if (seen[s])
      continue;
    std::uint32_t len = 0;
    for (std::uint32_t q = s; !seen[q]; q = images[q]) {
      seen[q] = 1;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

AltClassLabel alt_power_class(const AltClassLabel& label, std::int64_t j) {
  const std::uint64_t o = type_order(label.type);
  const std::uint64_t jj = mod_floor(j, o);
  if (std::gcd(jj, o) != 1)
    throw JNotCoprime("power " + std::to_string(j) + " is not coprime to the element order " + std::to_string(o));
  if (label.tag == SplitTag::Whole)
    return label;
  // The conjugator p_i -> p_{i*j} on each cycle carries x to x^j.
  bool odd = false;
  for (std::uint32_t p : label.type)
    odd ^= multiplier_is_odd(p, jj % p);
  if (!odd)
    return label;
  return AltClassLabel{label.type, label.tag == SplitTag::Plus ? SplitTag::Minus : SplitTag::Plus};
}

std::string label_text(const AltClassLabel& label) {
  std::string out = type_text(label.type);
  if (label.tag == SplitTag::Plus)
    out += "+";
  else if (label.tag == SplitTag::Minus)
    out += "-";
  return out;
}

std::vector<AltClassLabel> alt_class_labels(std::uint32_t n) {
  check_degree(n);
  std::vector<AltClassLabel> out;
  for (auto& t : partitions(n)) {
    if (!is_even_type(t))
      continue;
    // Alt(1) and Alt(2) are trivial and their single class never splits.
    if (n >= 3 && an_class_splits(t)) {
      out.push_back({t, SplitTag::Plus});
      out.push_back({t, SplitTag::Minus});
    } else {
      out.push_back({t, SplitTag::Whole});
    }
  }
  return out;
}

ClassTable alt_class_table(std::uint32_t n) { return build_table(n, alt_class_labels(n), true); }

ClassTable sym_class_table(std::uint32_t n) {
  check_degree(n);
  std::vector<AltClassLabel> labels;
  for (auto& t : partitions(n))
    labels.push_back({t, SplitTag::Whole});
  return build_table(n, labels, false);
}

} // namespace cutgroups
