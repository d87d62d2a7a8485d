#pragma once

// Prime-field arithmetic over F_p for primes below 2^63.

#include <compare>
#include <cstdint>
#include <utility>

namespace mecforge {

/// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(std::uint64_t n) noexcept;

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  // a, b < p < 2^63, so a + b cannot wrap.
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) noexcept;

/// An odd prime p >= 3. `mec_admissible()` holds iff p = 2 (mod 3), which is
/// the case where y^2 = x^3 + b has exactly one x per y.
class PrimeModulus {
public:
  /// Throws Error{NotPrime} for composites, 2, and p >= 2^63.
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }
  bool mec_admissible() const noexcept { return p_ % 3 == 2; }

  /// (2p - 1) / 3, the inverse of 3 modulo p - 1 when p = 2 (mod 3).
  std::uint64_t cube_root_exponent() const noexcept { return (2 * p_ - 1) / 3; }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

private:
  std::uint64_t p_;
};

/// Canonical residue in [0, p - 1] tagged with its modulus.
class FieldElement {
public:
  FieldElement(std::uint64_t value, const PrimeModulus& modulus) noexcept
      : value_(value % modulus.value()), modulus_(modulus) {}

  std::uint64_t value() const noexcept { return value_; }
  const PrimeModulus& modulus() const noexcept { return modulus_; }
  std::uint64_t p() const noexcept { return modulus_.value(); }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const noexcept {
    return {add_mod(value_, o.value_, p()), modulus_};
  }
  FieldElement operator-(const FieldElement& o) const noexcept {
    return {sub_mod(value_, o.value_, p()), modulus_};
  }
  FieldElement operator*(const FieldElement& o) const noexcept {
    return {mul_mod(value_, o.value_, p()), modulus_};
  }
  FieldElement operator-() const noexcept { return {value_ == 0 ? 0 : p() - value_, modulus_}; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
  std::uint64_t value_;
  PrimeModulus modulus_;
};

FieldElement mod_pow(const FieldElement& base, std::uint64_t exp) noexcept;

/// Throws Error{ZeroInverse} for a = 0.
FieldElement mod_inverse(const FieldElement& a);

/// Euler's criterion: a is a QR iff a^((p-1)/2) = +1. Throws Error{ZeroInput} for a = 0.
bool is_quadratic_residue(const FieldElement& a);

/// Returns {beta, p - beta} with beta^2 = a and beta <= p - beta; {0, 0} for a = 0.
/// Throws Error{NonResidue} for a quadratic non-residue.
std::pair<FieldElement, FieldElement> sqrt_mod(const FieldElement& a);

/// Unique c with c^3 = a. Throws Error{NotAdmissible} unless p = 2 (mod 3).
FieldElement cube_root(const FieldElement& a);

/// Smallest a in [2, p - 1] that is a quadratic non-residue.
FieldElement smallest_qnr(const PrimeModulus& p);

// Raw-residue variants used on hot paths; callers guarantee the preconditions.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) noexcept;
inline std::uint64_t cube_root_mod(std::uint64_t a, const PrimeModulus& p) noexcept {
  return pow_mod(a, p.cube_root_exponent(), p.value());
}

}  // namespace mecforge
