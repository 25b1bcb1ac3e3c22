#pragma once

// Exact modular and rational arithmetic shared by every other module.
// All integer arithmetic that can grow is overflow-checked and throws
// std::overflow_error instead of wrapping.

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace pgonal {

using Int = std::int64_t;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Least non-negative residue of a modulo m (m > 0).
constexpr Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int pow_mod(Int base, Int exponent, Int modulus);
Int inverse_mod(Int a, Int modulus);

/// Deterministic primality by trial division up to sqrt(n).
bool is_prime(Int n);

/// Odd prime p >= 5, the order of the cyclic deck group.
class PrimeModulus {
 public:
  explicit PrimeModulus(Int p);

  Int value() const { return p_; }
  operator Int() const { return p_; }  // NOLINT: used freely in modular expressions

  friend bool operator==(PrimeModulus, PrimeModulus) = default;
  friend auto operator<=>(PrimeModulus, PrimeModulus) = default;

 private:
  Int p_;
};

/// Element of the multiplicative group (Z/p)^*.
class Unit {
 public:
  Unit(Int value, PrimeModulus modulus);

  Int value() const { return value_; }
  PrimeModulus modulus() const { return modulus_; }

  Unit operator*(Unit other) const;
  Unit inverse() const;
  Unit pow(Int e) const;
  bool is_one() const { return value_ == 1; }

  friend bool operator==(Unit, Unit) = default;
  friend auto operator<=>(Unit a, Unit b) { return a.value_ <=> b.value_; }

 private:
  Int value_;
  PrimeModulus modulus_;
};

/// Least s >= 1 with u^s = 1 mod p.
Int mult_order(Unit u);

struct PrimeOrderUnit {
  Unit unit;
  Int order;
  friend bool operator==(const PrimeOrderUnit&, const PrimeOrderUnit&) = default;
};

/// Units u != 1 whose multiplicative order q is prime, sorted by (q, u).
std::vector<PrimeOrderUnit> units_of_prime_order(PrimeModulus p);

/// lcm of (p_i - 1)/2 over a non-empty set of distinct primes.
Int lcm_half_primes(std::span<const PrimeModulus> primes);

/// Rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(Int numerator) : num_(numerator), den_(1) {}  // NOLINT: implicit from integers
  Rational(Int numerator, Int denominator);

  Int numerator() const { return num_; }
  Int denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;

 private:
  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace pgonal
