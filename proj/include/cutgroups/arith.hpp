// Elementary number theory and exact rationals.

#ifndef CUTGROUPS_ARITH_HPP_
#define CUTGROUPS_ARITH_HPP_

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

namespace cutgroups {

// Wide enough for |Alt(22)| = 22!/2.
using Count = unsigned __int128;

std::string to_string(Count value);

inline std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
inline std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b) {
  return (a == 0 || b == 0) ? 0 : a / std::gcd(a, b) * b;
}

// Least non-negative residue of a modulo m (m > 0).
inline std::uint64_t mod_floor(std::int64_t a, std::uint64_t m) {
  std::int64_t r = a % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

bool is_prime(std::uint64_t n);
// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(Count n);
std::uint64_t euler_phi(std::uint64_t n);
bool is_squarefree(std::int64_t d);
std::vector<std::uint64_t> divisors(std::uint64_t n);
// Residues in [0, m) coprime to m; for m = 1 this is {0}.
std::vector<std::uint64_t> unit_residues(std::uint64_t m);
// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

// Exact rational with 64-bit numerator and denominator. Overflow throws
// std::overflow_error instead of wrapping.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;

private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace cutgroups

#endif // CUTGROUPS_ARITH_HPP_
