#include "cutgroups/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <random>
#include <unordered_map>

#include "cutgroups/arith.hpp"
#include "cutgroups/errors.hpp"

namespace cutgroups {

std::string GroupBackend::describe(Elem x) const { return "#" + std::to_string(x); }

namespace {

// Permutations on up to 255 points, product x*y applies x first.
class PermutationBackend final : public GroupBackend {
public:
  PermutationBackend(std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& gens,
                     std::uint64_t cap)
      : degree_(degree) {
    std::string identity(degree_, '\0');
    for (std::uint32_t i = 0; i < degree_; ++i)
      identity[i] = static_cast<char>(i);
    std::vector<std::string> gen_keys;
    for (const auto& g : gens) {
      std::string key(degree_, '\0');
      for (std::uint32_t i = 0; i < degree_; ++i)
        key[i] = static_cast<char>(g[i]);
      gen_keys.push_back(key);
    }
    std::vector<std::string> found{identity};
    std::unordered_map<std::string, Elem> seen{{identity, 0}};
    for (std::size_t head = 0; head < found.size(); ++head) {
      for (const auto& g : gen_keys) {
        std::string prod = compose(found[head], g);
        if (seen.emplace(prod, static_cast<Elem>(found.size())).second) {
          found.push_back(std::move(prod));
          if (found.size() > cap)
            throw OrderCapExceeded("permutation group exceeds order cap " + std::to_string(cap));
        }
      }
    }
    std::sort(found.begin(), found.end(), [](const std::string& a, const std::string& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                          [](char x, char y) {
                                            return static_cast<unsigned char>(x) <
                                                   static_cast<unsigned char>(y);
                                          });
    });
    index_.reserve(found.size());
    for (std::size_t i = 0; i < found.size(); ++i)
      index_.emplace(found[i], static_cast<Elem>(i));
    perms_ = std::move(found);
    for (const auto& g : gen_keys) {
      Elem e = index_.at(g);
      if (e != 0 && std::find(gens_.begin(), gens_.end(), e) == gens_.end())
        gens_.push_back(e);
    }
  }

  std::uint64_t size() const override { return perms_.size(); }

  Elem multiply(Elem a, Elem b) const override {
    thread_local std::string buf;
    const std::string& x = perms_[a];
    const std::string& y = perms_[b];
    buf.resize(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i)
      buf[i] = y[static_cast<unsigned char>(x[i])];
    return index_.find(buf)->second;
  }

  std::vector<Elem> generators() const override { return gens_; }
  std::string tag() const override { return "permutation"; }

  std::vector<std::uint32_t> images(Elem x) const {
    std::vector<std::uint32_t> out(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i)
      out[i] = static_cast<unsigned char>(perms_[x][i]);
    return out;
  }

  std::optional<Elem> lookup(const std::vector<std::uint32_t>& img) const {
    if (img.size() != degree_)
      return std::nullopt;
    std::string key(degree_, '\0');
    for (std::uint32_t i = 0; i < degree_; ++i)
      key[i] = static_cast<char>(img[i]);
    auto it = index_.find(key);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  std::string describe(Elem x) const override {
    const std::string& p = perms_[x];
    std::string out;
    std::vector<bool> seen(degree_, false);
    for (std::uint32_t s = 0; s < degree_; ++s) {
      if (seen[s] || static_cast<unsigned char>(p[s]) == s)
        continue;
      out += "(";
      for (std::uint32_t q = s; !seen[q]; q = static_cast<unsigned char>(p[q])) {
        seen[q] = true;
        if (q != s)
          out += ",";
        out += std::to_string(q + 1);
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

private:
  std::string compose(const std::string& x, const std::string& y) const {
    std::string out(degree_, '\0');
    for (std::uint32_t i = 0; i < degree_; ++i)
      out[i] = y[static_cast<unsigned char>(x[i])];
    return out;
  }

  std::uint32_t degree_;
  std::vector<std::string> perms_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<Elem> gens_;
};

// Normal forms a^i b^j, index i*t + j, with b^-1 a b = a^r and b^t = a^l.
class MetacyclicBackend final : public GroupBackend {
public:
  explicit MetacyclicBackend(const MetacyclicSpec& s) : n_(s.n), t_(s.t), l_(s.l % s.n) {
    // b a^k = a^(k s) b where s = r^-1 mod n.
    std::uint64_t sinv = inv_mod(s.r % s.n, s.n);
    spow_.resize(t_);
    std::uint64_t cur = 1 % n_;
    for (std::uint64_t j = 0; j < t_; ++j) {
      spow_[j] = cur;
      cur = mul_mod(cur, sinv, n_);
    }
  }

  std::uint64_t size() const override { return n_ * t_; }

  Elem multiply(Elem x, Elem y) const override {
    std::uint64_t i = x / t_, j = x % t_, k = y / t_, m = y % t_;
    std::uint64_t a = (i + mul_mod(k, spow_[j], n_)) % n_;
    std::uint64_t b = j + m;
    if (b >= t_) {
      b -= t_;
      a = (a + l_) % n_;
    }
    return static_cast<Elem>(a * t_ + b);
  }

  std::vector<Elem> generators() const override {
    std::vector<Elem> g;
    if (n_ > 1)
      g.push_back(static_cast<Elem>(t_));
    if (t_ > 1)
      g.push_back(1);
    return g;
  }

  std::string tag() const override { return "metacyclic"; }

  std::string describe(Elem x) const override {
    return "a^" + std::to_string(x / t_) + " b^" + std::to_string(x % t_);
  }

  Elem element(std::uint64_t i, std::uint64_t j) const { return static_cast<Elem>(i * t_ + j); }

private:
  std::uint64_t n_, t_, l_;
  std::vector<std::uint64_t> spow_;
};

// Split extension A x| <g>, elements g^k v with index k*|A| + lin(v);
// x^g = M x, so (g^k v)(g^m w) = g^(k+m) (M^m v + w).
class AbelianByCyclicBackend final : public GroupBackend {
public:
  AbelianByCyclicBackend(const std::vector<std::uint64_t>& invariants,
                         const std::vector<std::vector<std::int64_t>>& action, std::uint64_t t,
                         std::string tag)
      : inv_(invariants), t_(t), tag_(std::move(tag)) {
    asize_ = 1;
    for (std::uint64_t d : inv_)
      asize_ *= d;
    act_.assign(t_ + 1, std::vector<Elem>(asize_));
    std::iota(act_[0].begin(), act_[0].end(), 0u);
    std::vector<std::uint64_t> v(inv_.size()), w(inv_.size());
    for (std::uint64_t x = 0; x < asize_; ++x) {
      decode(x, v);
      for (std::size_t i = 0; i < inv_.size(); ++i) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < inv_.size(); ++k)
          s = static_cast<std::int64_t>(mod_floor(s + action[i][k] * static_cast<std::int64_t>(v[k]), inv_[i]));
        w[i] = static_cast<std::uint64_t>(s);
      }
      act_[1 % (t_ + 1)][x] = encode(w);
    }
    for (std::uint64_t m = 2; m <= t_; ++m) {
      for (std::uint64_t x = 0; x < asize_; ++x)
        act_[m][x] = act_[1][act_[m - 1][x]];
    }
    std::vector<bool> hit(asize_, false);
    for (std::uint64_t x = 0; x < asize_; ++x) {
      if (t_ >= 1 && hit[act_[1][x]])
        throw InvalidSpec("abc: action is not injective on A");
      hit[act_[1][x]] = true;
    }
    for (std::uint64_t x = 0; x < asize_; ++x) {
      if (act_[t_][x] != x)
        throw InvalidSpec("abc: t-th power of the action is not the identity");
    }
    act_.pop_back();
  }

  std::uint64_t size() const override { return asize_ * t_; }

  Elem multiply(Elem x, Elem y) const override {
    std::uint64_t k1 = x / asize_, v1 = x % asize_, k2 = y / asize_, v2 = y % asize_;
    std::uint64_t moved = act_[k2][v1];
    thread_local std::vector<std::uint64_t> a, b;
    a.resize(inv_.size());
    b.resize(inv_.size());
    decode(moved, a);
    decode(v2, b);
    for (std::size_t i = 0; i < inv_.size(); ++i)
      a[i] = (a[i] + b[i]) % inv_[i];
    return static_cast<Elem>(((k1 + k2) % t_) * asize_ + encode(a));
  }

  std::vector<Elem> generators() const override {
    std::vector<Elem> g;
    if (t_ > 1)
      g.push_back(static_cast<Elem>(asize_));
    std::vector<std::uint64_t> v(inv_.size(), 0);
    for (std::size_t i = 0; i < inv_.size(); ++i) {
      if (inv_[i] == 1)
        continue;
      std::fill(v.begin(), v.end(), 0);
      v[i] = 1;
      g.push_back(static_cast<Elem>(encode(v)));
    }
    return g;
  }

  std::string tag() const override { return tag_; }

  std::string describe(Elem x) const override {
    std::vector<std::uint64_t> v(inv_.size());
    decode(x % asize_, v);
    std::string out = t_ > 1 ? "g^" + std::to_string(x / asize_) + " " : "";
    out += "(";
    for (std::size_t i = 0; i < v.size(); ++i)
      out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
  }

private:
  void decode(std::uint64_t x, std::vector<std::uint64_t>& v) const {
    for (std::size_t i = inv_.size(); i-- > 0;) {
      v[i] = x % inv_[i];
      x /= inv_[i];
    }
  }
  std::uint64_t encode(const std::vector<std::uint64_t>& v) const {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < inv_.size(); ++i)
      x = x * inv_[i] + v[i];
    return x;
  }

  std::vector<std::uint64_t> inv_;
  std::uint64_t t_;
  std::uint64_t asize_ = 1;
  std::vector<std::vector<Elem>> act_;  // act_[m][v] = M^m v
  std::string tag_;
};

class ProductBackend final : public GroupBackend {
public:
  ProductBackend(FiniteGroup a, FiniteGroup b) : a_(std::move(a)), b_(std::move(b)), nb_(b_.order()) {}

  std::uint64_t size() const override { return a_.order() * nb_; }

  Elem multiply(Elem x, Elem y) const override {
    Elem i = a_.mul(static_cast<Elem>(x / nb_), static_cast<Elem>(y / nb_));
    Elem j = b_.mul(static_cast<Elem>(x % nb_), static_cast<Elem>(y % nb_));
    return static_cast<Elem>(i * nb_ + j);
  }

  std::vector<Elem> generators() const override {
    std::vector<Elem> g;
    for (Elem x : a_.generators())
      g.push_back(static_cast<Elem>(x * nb_));
    for (Elem y : b_.generators())
      g.push_back(y);
    return g;
  }

  std::string tag() const override { return "product"; }

  std::string describe(Elem x) const override {
    return "[" + a_.describe(static_cast<Elem>(x / nb_)) + " ; " + b_.describe(static_cast<Elem>(x % nb_)) + "]";
  }

private:
  FiniteGroup a_, b_;
  std::uint64_t nb_;
};

class SubgroupBackend final : public GroupBackend {
public:
  explicit SubgroupBackend(Subgroup h) : h_(std::move(h)) {}

  std::uint64_t size() const override { return h_.elements.size(); }

  Elem multiply(Elem x, Elem y) const override { return locate(h_.parent.mul(h_.elements[x], h_.elements[y])); }

  std::vector<Elem> generators() const override {
    std::vector<Elem> g;
    for (Elem x : h_.generators) {
      Elem i = locate(x);
      if (i != 0)
        g.push_back(i);
    }
    return g;
  }

  std::string tag() const override { return "subgroup"; }
  std::string describe(Elem x) const override { return h_.parent.describe(h_.elements[x]); }

private:
  Elem locate(Elem parent_elem) const {
    auto it = std::lower_bound(h_.elements.begin(), h_.elements.end(), parent_elem);
    return static_cast<Elem>(it - h_.elements.begin());
  }

  Subgroup h_;
};

class QuotientBackend final : public GroupBackend {
public:
  explicit QuotientBackend(const Subgroup& n) : parent_(n.parent) {
    coset_of_.assign(parent_.order(), UINT32_MAX);
    for (Elem x = 0; x < parent_.order(); ++x) {
      if (coset_of_[x] != UINT32_MAX)
        continue;
      Elem id = static_cast<Elem>(reps_.size());
      reps_.push_back(x);
      for (Elem k : n.elements)
        coset_of_[parent_.mul(x, k)] = id;
    }
  }

  std::uint64_t size() const override { return reps_.size(); }
  Elem multiply(Elem x, Elem y) const override { return coset_of_[parent_.mul(reps_[x], reps_[y])]; }

  std::vector<Elem> generators() const override {
    std::vector<Elem> g;
    for (Elem x : parent_.generators()) {
      Elem c = coset_of_[x];
      if (c != 0 && std::find(g.begin(), g.end(), c) == g.end())
        g.push_back(c);
    }
    return g;
  }

  std::string tag() const override { return "quotient"; }
  std::string describe(Elem x) const override { return parent_.describe(reps_[x]) + "N"; }

private:
  FiniteGroup parent_;
  std::vector<Elem> coset_of_;
  std::vector<Elem> reps_;
};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void audit_group_laws(const FiniteGroup& g) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint64_t> pick(0, g.order() - 1);
  for (int i = 0; i < 64; ++i) {
    Elem a = static_cast<Elem>(pick(rng)), b = static_cast<Elem>(pick(rng)), c = static_cast<Elem>(pick(rng));
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw InvalidSpec("realized multiplication is not associative");
  }
}

FiniteGroup realize_impl(const GroupSpec& spec, std::uint64_t cap) {
  return std::visit(
      overloaded{
          [cap](const PermutationSpec& p) {
            if (p.degree > 255)
              throw InvalidSpec("permutation degree above 255 is not supported");
            return FiniteGroup(std::make_shared<PermutationBackend>(p.degree, p.generators, cap));
          },
          [](const MetacyclicSpec& m) {
            auto backend = std::make_shared<MetacyclicBackend>(m);
            FiniteGroup g(backend);
            // Relation audit on the realized elements.
            Elem a = backend->element(1 % m.n, 0), b = backend->element(0, 1 % m.t);
            if (g.pow(a, static_cast<std::int64_t>(m.n)) != 0 ||
                g.pow(b, static_cast<std::int64_t>(m.t)) != g.pow(a, static_cast<std::int64_t>(m.l)) ||
                g.conj(a, b) != g.pow(a, static_cast<std::int64_t>(m.r)))
              throw InvalidSpec("metacyclic relation audit failed");
            return g;
          },
          [](const AbelianByCyclicSpec& a) {
            return FiniteGroup(std::make_shared<AbelianByCyclicBackend>(a.invariants, a.action, a.t, "abelian-by-cyclic"));
          },
          [](const AbelianSpec& a) {
            std::vector<std::vector<std::int64_t>> id(a.invariants.size(),
                                                      std::vector<std::int64_t>(a.invariants.size(), 0));
            for (std::size_t i = 0; i < id.size(); ++i)
              id[i][i] = 1;
            return FiniteGroup(std::make_shared<AbelianByCyclicBackend>(a.invariants, id, 1, "abelian"));
          },
          [cap](const DirectProductSpec& d) {
            FiniteGroup acc = realize(d.factors.front(), cap);
            for (std::size_t i = 1; i < d.factors.size(); ++i)
              acc = direct_product(acc, realize(d.factors[i], cap), cap);
            return acc;
          },
          [&spec, cap](const NamedSpec&) { return realize(expand_named(spec), cap); },
      },
      spec.value);
}

std::vector<Elem> collect(const std::vector<char>& member) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < member.size(); ++i) {
    if (member[i])
      out.push_back(static_cast<Elem>(i));
  }
  return out;
}

} // namespace

FiniteGroup::FiniteGroup(std::shared_ptr<const GroupBackend> backend) {
  auto data = std::make_shared<Data>();
  data->backend = std::move(backend);
  const std::uint64_t n = data->backend->size();
  data->inverse.assign(n, 0);
  data->order.assign(n, 0);
  std::uint64_t exponent = 1;
  for (Elem x = 0; x < n; ++x) {
    if (data->order[x] != 0)
      continue;
    Elem prev = 0, cur = x;
    std::uint32_t k = 1;
    while (cur != 0) {
      prev = cur;
      cur = data->backend->multiply(cur, x);
      ++k;
    }
    // Here x^k = 1 and prev = x^(k-1) = x^-1.
    std::uint32_t ord = (x == 0) ? 1 : k;
    data->order[x] = ord;
    data->inverse[x] = (x == 0) ? 0 : prev;
    exponent = lcm_u(exponent, ord);
  }
  data->exponent = exponent;
  data->generators = data->backend->generators();
  data_ = std::move(data);
}

Elem FiniteGroup::pow(Elem x, std::int64_t j) const {
  std::uint32_t o = elem_order(x);
  std::uint64_t e = mod_floor(j, o);
  Elem result = 0, base = x;
  while (e > 0) {
    if (e & 1)
      result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool Subgroup::contains(Elem x) const { return std::binary_search(elements.begin(), elements.end(), x); }

FiniteGroup realize(const GroupSpec& spec, std::uint64_t cap) {
  validate_spec(spec);
  if (auto predicted = predicted_order(spec); predicted && *predicted > cap)
    throw OrderCapExceeded("predicted order " + std::to_string(*predicted) + " exceeds cap " + std::to_string(cap));
  FiniteGroup g = realize_impl(spec, cap);
  if (auto predicted = predicted_order(spec); predicted && *predicted != g.order())
    throw InvalidSpec("realized order differs from the order implied by the parameters");
  audit_group_laws(g);
  return g;
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup h{g, {}, g.generators()};
  h.elements.resize(g.order());
  std::iota(h.elements.begin(), h.elements.end(), 0u);
  return h;
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> member(g.order(), 0);
  member[0] = 1;
  std::vector<Elem> elems{0};
  std::vector<Elem> used;
  for (Elem s : gens) {
    if (member[s])
      continue;
    used.push_back(s);
    // Re-run the right-multiplication closure from every known element.
    std::deque<Elem> queue(elems.begin(), elems.end());
    while (!queue.empty()) {
      Elem x = queue.front();
      queue.pop_front();
      for (Elem h : used) {
        Elem y = g.mul(x, h);
        if (!member[y]) {
          member[y] = 1;
          elems.push_back(y);
          queue.push_back(y);
        }
      }
    }
  }
  return Subgroup{g, collect(member), used};
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> ambient_gens, std::span<const Elem> seeds) {
  Subgroup n = subgroup_closure(g, seeds);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem a : ambient_gens) {
      for (Elem x : std::vector<Elem>(n.generators)) {
        Elem c = g.conj(x, a);
        if (!n.contains(c)) {
          std::vector<Elem> gens = n.generators;
          gens.push_back(c);
          n = subgroup_closure(g, gens);
          changed = true;
        }
      }
    }
  }
  return n;
}

Subgroup centralizer(const FiniteGroup& g, Elem x) {
  std::vector<char> member(g.order(), 0);
  for (Elem y = 0; y < g.order(); ++y)
    member[y] = g.mul(x, y) == g.mul(y, x);
  auto elems = collect(member);
  return subgroup_closure(g, elems);
}

Subgroup cyclic_normalizer(const FiniteGroup& g, Elem x) {
  std::vector<char> in_cyclic(g.order(), 0);
  for (Elem p = 0, k = 0; k < g.elem_order(x); ++k, p = g.mul(p, x))
    in_cyclic[p] = 1;
  std::vector<char> member(g.order(), 0);
  for (Elem y = 0; y < g.order(); ++y)
    member[y] = in_cyclic[g.conj(x, y)];
  return subgroup_closure(g, collect(member));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  std::vector<char> member(g.order(), 0);
  for (Elem y = 0; y < g.order(); ++y) {
    bool ok = true;
    for (Elem s : h.generators) {
      if (!h.contains(g.conj(s, y))) {
        ok = false;
        break;
      }
    }
    member[y] = ok;
  }
  return subgroup_closure(g, collect(member));
}

Subgroup center(const FiniteGroup& g) {
  std::vector<char> member(g.order(), 0);
  for (Elem y = 0; y < g.order(); ++y) {
    bool central = true;
    for (Elem s : g.generators()) {
      if (g.mul(s, y) != g.mul(y, s)) {
        central = false;
        break;
      }
    }
    member[y] = central;
  }
  return subgroup_closure(g, collect(member));
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  const auto& gens = g.generators();
  std::vector<Elem> comms;
  for (Elem a : gens) {
    for (Elem b : gens) {
      Elem c = g.commutator(a, b);
      if (c != 0)
        comms.push_back(c);
    }
  }
  return normal_closure(g, gens, comms);
}

bool is_abelian(const Subgroup& h) {
  const FiniteGroup& g = h.parent;
  for (Elem a : h.generators) {
    for (Elem b : h.generators) {
      if (g.mul(a, b) != g.mul(b, a))
        return false;
    }
  }
  return true;
}

bool is_normal(const Subgroup& h) {
  const FiniteGroup& g = h.parent;
  for (Elem a : g.generators()) {
    for (Elem x : h.generators) {
      if (!h.contains(g.conj(x, a)))
        return false;
    }
  }
  return true;
}

SolvabilityFlags solvability_flags(const FiniteGroup& g) {
  SolvabilityFlags f;
  f.is_abelian = is_abelian(whole_group(g));
  // Derived series.
  Subgroup cur = whole_group(g);
  while (cur.size() > 1) {
    std::vector<Elem> comms;
    for (Elem a : cur.generators) {
      for (Elem b : cur.generators) {
        Elem c = g.commutator(a, b);
        if (c != 0)
          comms.push_back(c);
      }
    }
    Subgroup next = normal_closure(g, cur.generators, comms);
    if (next.size() == cur.size())
      break;
    cur = std::move(next);
  }
  f.is_solvable = cur.size() == 1;
  // Lower central series.
  cur = whole_group(g);
  while (cur.size() > 1) {
    std::vector<Elem> comms;
    for (Elem a : cur.generators) {
      for (Elem b : g.generators()) {
        Elem c = g.commutator(a, b);
        if (c != 0)
          comms.push_back(c);
      }
    }
    Subgroup next = normal_closure(g, g.generators(), comms);
    if (next.size() == cur.size())
      break;
    cur = std::move(next);
  }
  f.is_nilpotent = cur.size() == 1;
  return f;
}

Subgroup sylow_subgroup_in(const FiniteGroup& g, std::uint64_t p) {
  if (!is_prime(p) || g.order() % p != 0)
    throw PNotDividing(std::to_string(p) + " does not divide the group order " + std::to_string(g.order()));
  const std::uint64_t target = p_part(g.order(), p);
  Subgroup cur = subgroup_closure(g, {});
  while (cur.size() < target) {
    Subgroup n = normalizer(g, cur);
    Elem pick = 0;
    for (Elem x : n.elements) {
      if (!cur.contains(x) && p_part(g.elem_order(x), p) == g.elem_order(x)) {
        pick = x;
        break;
      }
    }
    if (pick == 0)
      throw Error("sylow search stalled");  // impossible by Sylow's theorems
    std::vector<Elem> gens = cur.generators;
    gens.push_back(pick);
    cur = subgroup_closure(g, gens);
  }
  return cur;
}

FiniteGroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p) { return as_group(sylow_subgroup_in(g, p)); }

std::vector<Subgroup> index_two_subgroups(const FiniteGroup& g) {
  std::vector<Elem> squares;
  std::vector<char> seen(g.order(), 0);
  for (Elem x = 0; x < g.order(); ++x) {
    Elem s = g.mul(x, x);
    if (s != 0 && !seen[s]) {
      seen[s] = 1;
      squares.push_back(s);
    }
  }
  // K = <g^2> is normal with G/K elementary abelian of rank r.
  std::vector<Subgroup> chain{subgroup_closure(g, squares)};
  std::vector<Elem> basis;
  while (chain.back().size() < g.order()) {
    Elem x = 0;
    while (chain.back().contains(x))
      ++x;
    basis.push_back(x);
    std::vector<Elem> gens = chain.back().generators;
    gens.push_back(x);
    chain.push_back(subgroup_closure(g, gens));
  }
  const std::size_t r = basis.size();
  if (r == 0)
    return {};
  std::vector<std::uint32_t> label(g.order(), 0);
  for (Elem y = 0; y < g.order(); ++y) {
    Elem cur = y;
    std::uint32_t bits = 0;
    for (std::size_t i = r; i-- > 0;) {
      if (!chain[i].contains(cur)) {
        bits |= 1u << i;
        cur = g.mul(cur, g.inv(basis[i]));
      }
    }
    label[y] = bits;
  }
  std::vector<Subgroup> out;
  for (std::uint32_t f = 1; f < (1u << r); ++f) {
    std::vector<char> member(g.order(), 0);
    for (Elem y = 0; y < g.order(); ++y)
      member[y] = (__builtin_popcount(label[y] & f) % 2) == 0;
    auto elems = collect(member);
    out.push_back(subgroup_closure(g, elems));
  }
  return out;
}

std::vector<Subgroup> index_two_abelian_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  for (auto& h : index_two_subgroups(g)) {
    if (is_abelian(h))
      out.push_back(std::move(h));
  }
  return out;
}

FiniteGroup as_group(const Subgroup& h) { return FiniteGroup(std::make_shared<SubgroupBackend>(h)); }

FiniteGroup quotient(const Subgroup& normal) { return FiniteGroup(std::make_shared<QuotientBackend>(normal)); }

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::uint64_t cap) {
  if (b.order() != 0 && a.order() > cap / b.order())
    throw OrderCapExceeded("direct product exceeds order cap " + std::to_string(cap));
  return FiniteGroup(std::make_shared<ProductBackend>(a, b));
}

std::vector<std::uint32_t> permutation_images(const FiniteGroup& g, Elem x) {
  const auto* p = dynamic_cast<const PermutationBackend*>(&g.backend());
  if (!p)
    throw NotApplicable("not a permutation group");
  return p->images(x);
}

Elem permutation_element(const FiniteGroup& g, const std::vector<std::uint32_t>& images) {
  const auto* p = dynamic_cast<const PermutationBackend*>(&g.backend());
  if (!p)
    throw NotApplicable("not a permutation group");
  auto e = p->lookup(images);
  if (!e)
    throw NotApplicable("permutation is not in the group");
  return *e;
}

} // namespace cutgroups
