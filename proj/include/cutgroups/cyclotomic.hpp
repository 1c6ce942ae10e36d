// Exact elements of Q(zeta_e) in the power basis modulo Phi_e.

#ifndef CUTGROUPS_CYCLOTOMIC_HPP_
#define CUTGROUPS_CYCLOTOMIC_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cutgroups/arith.hpp"

namespace cutgroups {

// Shared per-conductor data; entries are created once and never mutated.
struct CyclotomicField {
  std::uint64_t conductor = 1;
  std::size_t phi = 1;
  std::vector<std::int64_t> cyclotomic_poly;        // Phi_e, ascending, monic
  std::vector<std::vector<std::int64_t>> powers;    // zeta^k in the power basis, 0 <= k < e
};

// Thread-safe lookup; builds the field on first use.
const CyclotomicField& cyclotomic_field(std::uint64_t e);

class Cyclotomic {
public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(std::uint64_t conductor);

  static Cyclotomic rational(std::uint64_t conductor, const Rational& q);
  // zeta_e^k
  static Cyclotomic root_of_unity(std::uint64_t conductor, std::int64_t k);
  // sum of mult * zeta_e^exp
  static Cyclotomic from_root_sum(std::uint64_t conductor,
                                  const std::vector<std::pair<std::uint64_t, std::int64_t>>& terms);

  std::uint64_t conductor() const { return field_->conductor; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;

  // zeta -> zeta^j for j coprime to e.
  Cyclotomic galois(std::int64_t j) const;
  Cyclotomic conj() const { return galois(-1); }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  // Lexicographic on the coefficient vector; conductors must agree.
  friend bool lex_less(const Cyclotomic& a, const Cyclotomic& b);

  std::string str() const;

private:
  const CyclotomicField* field_;
  std::vector<Rational> coeffs_;
};

} // namespace cutgroups

#endif // CUTGROUPS_CYCLOTOMIC_HPP_
