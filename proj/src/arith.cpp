#include "pgonal/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace pgonal {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

Int pow_mod(Int base, Int exponent, Int modulus) {
  if (modulus <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
  if (exponent < 0) return pow_mod(inverse_mod(base, modulus), -exponent, modulus);
  __int128 result = 1 % modulus;
  __int128 b = mod(base, modulus);
  while (exponent > 0) {
    if (exponent & 1) result = result * b % modulus;
    b = b * b % modulus;
    exponent >>= 1;
  }
  return static_cast<Int>(result);
}

Int inverse_mod(Int a, Int modulus) {
  Int old_r = mod(a, modulus), r = modulus;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) throw std::invalid_argument("inverse_mod: element is not invertible");
  return mod(old_s, modulus);
}

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (Int d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(Int p) : p_(p) {
  if (p < 5) throw std::invalid_argument("prime modulus must be >= 5, got " + std::to_string(p));
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

Unit::Unit(Int value, PrimeModulus modulus) : value_(value), modulus_(modulus) {
  if (value < 1 || value >= modulus.value())
    throw std::invalid_argument("unit " + std::to_string(value) + " out of range [1, " +
                                std::to_string(modulus.value() - 1) + "]");
}

Unit Unit::operator*(Unit other) const {
  if (other.modulus_ != modulus_) throw std::invalid_argument("unit modulus mismatch");
  return Unit(static_cast<Int>(static_cast<__int128>(value_) * other.value_ % modulus_.value()), modulus_);
}

Unit Unit::inverse() const { return Unit(inverse_mod(value_, modulus_), modulus_); }

Unit Unit::pow(Int e) const { return Unit(pow_mod(value_, e, modulus_), modulus_); }

Int mult_order(Unit u) {
  const Int p = u.modulus();
  Int x = u.value();
  Int s = 1;
  while (x != 1) {
    x = static_cast<Int>(static_cast<__int128>(x) * u.value() % p);
    ++s;
  }
  return s;
}

std::vector<PrimeOrderUnit> units_of_prime_order(PrimeModulus p) {
  std::vector<PrimeOrderUnit> out;
  for (Int v = 2; v < p; ++v) {
    Unit u(v, p);
    Int q = mult_order(u);
    if (is_prime(q)) out.push_back({u, q});
  }
  std::sort(out.begin(), out.end(), [](const PrimeOrderUnit& a, const PrimeOrderUnit& b) {
    return std::pair(a.order, a.unit.value()) < std::pair(b.order, b.unit.value());
  });
  return out;
}

Int lcm_half_primes(std::span<const PrimeModulus> primes) {
  if (primes.empty()) throw std::invalid_argument("lcm_half_primes: empty prime list");
  std::vector<Int> seen;
  Int lambda = 1;
  for (PrimeModulus p : primes) {
    if (std::find(seen.begin(), seen.end(), p.value()) != seen.end())
      throw std::invalid_argument("lcm_half_primes: duplicate prime " + std::to_string(p.value()));
    seen.push_back(p);
    Int half = (p - 1) / 2;
    lambda = checked_mul(lambda / std::gcd(lambda, half), half);
  }
  return lambda;
}

Rational::Rational(Int numerator, Int denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  if (denominator < 0) {
    numerator = checked_sub(0, numerator);
    denominator = checked_sub(0, denominator);
  }
  Int g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational Rational::operator-() const { return Rational(checked_sub(0, num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  Int g = std::gcd(a.den_, b.den_);
  Int lhs = checked_mul(a.num_, b.den_ / g);
  Int rhs = checked_mul(b.num_, a.den_ / g);
  return Rational(checked_add(lhs, rhs), checked_mul(a.den_ / g, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  Int g1 = std::gcd(a.num_, b.den_);
  Int g2 = std::gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("rational division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace pgonal
