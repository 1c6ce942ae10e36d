#include "cutgroups/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace cutgroups {

namespace {

using Poly = std::vector<std::int64_t>;

// Exact division by a monic polynomial.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    q[i - dn] = c;
    for (std::size_t k = 0; k <= dn; ++k)
      num[i - dn + k] -= c * den[k];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0)
      throw std::logic_error("cyclotomic polynomial division is not exact");
  }
  return q;
}

Poly cyclotomic_poly(std::uint64_t e, std::map<std::uint64_t, Poly>& memo) {
  if (auto it = memo.find(e); it != memo.end())
    return it->second;
  Poly p(e + 1, 0);
  p[0] = -1;
  p[e] = 1;
  for (std::uint64_t d : divisors(e)) {
    if (d != e)
      p = divide_monic(p, cyclotomic_poly(d, memo));
  }
  memo[e] = p;
  return p;
}

std::unique_ptr<CyclotomicField> build_field(std::uint64_t e) {
  static std::map<std::uint64_t, Poly> memo;  // guarded by the registry mutex
  auto f = std::make_unique<CyclotomicField>();
  f->conductor = e;
  f->cyclotomic_poly = cyclotomic_poly(e, memo);
  f->phi = f->cyclotomic_poly.size() - 1;
  const std::size_t phi = f->phi;
  f->powers.assign(e, std::vector<std::int64_t>(phi, 0));
  std::vector<std::int64_t> cur(phi, 0);
  cur[0] = 1;
  for (std::uint64_t k = 0; k < e; ++k) {
    f->powers[k] = cur;
    // Multiply by zeta and reduce with zeta^phi = -sum c_i zeta^i.
    std::int64_t top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i)
      cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < phi; ++i)
      cur[i] -= top * f->cyclotomic_poly[i];
  }
  return f;
}

} // namespace

const CyclotomicField& cyclotomic_field(std::uint64_t e) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::unique_ptr<CyclotomicField>> registry;
  if (e == 0)
    throw std::invalid_argument("conductor must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[e];
  if (!slot)
    slot = build_field(e);
  return *slot;
}

Cyclotomic::Cyclotomic(std::uint64_t conductor)
    : field_(&cyclotomic_field(conductor)), coeffs_(field_->phi, Rational(0)) {}

Cyclotomic Cyclotomic::rational(std::uint64_t conductor, const Rational& q) {
  Cyclotomic c(conductor);
  c.coeffs_[0] = q;
  return c;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t conductor, std::int64_t k) {
  return from_root_sum(conductor, {{mod_floor(k, conductor), 1}});
}

Cyclotomic Cyclotomic::from_root_sum(std::uint64_t conductor,
                                     const std::vector<std::pair<std::uint64_t, std::int64_t>>& terms) {
  Cyclotomic c(conductor);
  std::vector<std::int64_t> acc(c.field_->phi, 0);
  for (auto [k, mult] : terms) {
    const auto& row = c.field_->powers[k % conductor];
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc[i] += mult * row[i];
  }
  for (std::size_t i = 0; i < acc.size(); ++i)
    c.coeffs_[i] = Rational(acc[i]);
  return c;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.field_ != field_)
    throw std::invalid_argument("cyclotomic conductors differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.field_ != field_)
    throw std::invalid_argument("cyclotomic conductors differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic c(*this);
  for (auto& x : c.coeffs_)
    x = -x;
  return c;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ != b.field_)
    throw std::invalid_argument("cyclotomic conductors differ");
  const std::uint64_t e = a.conductor();
  std::vector<Rational> by_power(e, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero())
      continue;
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
      if (!b.coeffs_[k].is_zero())
        by_power[(i + k) % e] += a.coeffs_[i] * b.coeffs_[k];
    }
  }
  Cyclotomic out(e);
  for (std::uint64_t p = 0; p < e; ++p) {
    if (by_power[p].is_zero())
      continue;
    const auto& row = a.field_->powers[p];
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
      if (row[i] != 0)
        out.coeffs_[i] += by_power[p] * Rational(row[i]);
    }
  }
  return out;
}

Cyclotomic Cyclotomic::galois(std::int64_t j) const {
  const std::uint64_t e = conductor();
  const std::uint64_t jj = mod_floor(j, e);
  if (gcd_u(jj, e) != 1)
    throw std::invalid_argument("galois exponent not coprime to the conductor");
  Cyclotomic out(e);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero())
      continue;
    const auto& row = field_->powers[mul_mod(i, jj, e)];
    for (std::size_t k = 0; k < out.coeffs_.size(); ++k) {
      if (row[k] != 0)
        out.coeffs_[k] += coeffs_[i] * Rational(row[k]);
    }
  }
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : coeffs_) {
    if (!x.is_zero())
      return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero())
      return false;
  }
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational())
    throw std::logic_error("cyclotomic value is not rational");
  return coeffs_[0];
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

bool lex_less(const Cyclotomic& a, const Cyclotomic& b) {
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
}

std::string Cyclotomic::str() const {
  std::string out;
  const std::string z = "E(" + std::to_string(conductor()) + ")";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero())
      continue;
    std::string term;
    if (i == 0) {
      term = c.str();
    } else {
      if (c == Rational(1))
        term = "";
      else if (c == Rational(-1))
        term = "-";
      else
        term = c.str() + "*";
      term += z + (i == 1 ? "" : "^" + std::to_string(i));
    }
    if (!out.empty() && term[0] != '-')
      out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

} // namespace cutgroups
