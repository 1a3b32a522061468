#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace supchar {

using Rational = mpq_class;

// num/den in lowest terms.
Rational ratio(long num, long den);
std::string to_string(const Rational& r);
// Parses "p" or "p/q"; throws InputError.
Rational parse_rational(const std::string& text);

namespace detail {
struct CyclotomicField;
}

// Exact element of Q(zeta_N), stored in the power basis 1, z, ..., z^(phi(N)-1)
// reduced modulo the N-th cyclotomic polynomial. Values with different
// conductors are lifted to the lcm before any binary operation.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT: integers convert implicitly
  explicit Cyclotomic(const Rational& value, int conductor = 1);

  // zeta_n^power
  static Cyclotomic zeta(int n, long power = 1);
  // sum_e counts[e] * zeta_n^e, with counts.size() == n
  static Cyclotomic from_exponent_counts(int n, std::span<const long> counts);

  int conductor() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Same value written over Q(zeta_m); m must be a multiple of conductor().
  Cyclotomic lifted(int m) const;
  // Complex conjugation (zeta -> zeta^-1).
  Cyclotomic conj() const;

  bool is_zero() const;
  std::optional<Rational> as_rational() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& scalar);
  Cyclotomic& operator/=(const Rational& scalar);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& s) { return a /= s; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  // Total order: lexicographic on coefficient vectors after lifting both
  // values to a common conductor.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

  // Renders as a rational combination of powers of zeta_N, e.g. "-1-z3".
  std::string to_string() const;

 private:
  Cyclotomic(const detail::CyclotomicField* field, std::vector<Rational> coeffs);
  void align_with(Cyclotomic& other);

  const detail::CyclotomicField* field_;
  std::vector<Rational> coeffs_;
};

int euler_phi(int n);
// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_polynomial(int n);

}  // namespace supchar
