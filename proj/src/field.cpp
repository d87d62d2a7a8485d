#include "mecforge/field.hpp"

#include <array>
#include <string>

#include "mecforge/error.hpp"

namespace mecforge {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) noexcept {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13,
                                                              17, 19, 23, 29, 31, 37};
  for (std::uint64_t w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= (std::uint64_t{1} << 63) || !is_prime(p)) {
    throw Error(ErrorKind::NotPrime, "p = " + std::to_string(p) + " is not an odd prime below 2^63");
  }
}

FieldElement mod_pow(const FieldElement& base, std::uint64_t exp) noexcept {
  return FieldElement(pow_mod(base.value(), exp, base.p()), base.modulus());
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) noexcept {
  // Extended Euclid on signed 128-bit coefficients.
  __int128 r0 = p, r1 = a;
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t0 < 0) t0 += p;
  return static_cast<std::uint64_t>(t0);
}

FieldElement mod_inverse(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInverse, "0 has no multiplicative inverse");
  const PrimeModulus& p = a.modulus();
  return FieldElement(inverse_mod(a.value(), p.value()), p);
}

namespace {

bool euler_criterion(std::uint64_t a, std::uint64_t p) noexcept {
  return pow_mod(a, (p - 1) / 2, p) == 1;
}

std::uint64_t tonelli_shanks(std::uint64_t a, std::uint64_t p) noexcept {
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);

  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (euler_criterion(z, p)) ++z;

  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  std::uint64_t t = pow_mod(a, q, p);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (unsigned j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

}  // namespace

bool is_quadratic_residue(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "0 is neither a residue nor a non-residue");
  return euler_criterion(a.value(), a.p());
}

std::pair<FieldElement, FieldElement> sqrt_mod(const FieldElement& a) {
  const PrimeModulus& p = a.modulus();
  if (a.is_zero()) return {FieldElement(0, p), FieldElement(0, p)};
  if (!is_quadratic_residue(a)) {
    throw Error(ErrorKind::NonResidue,
                std::to_string(a.value()) + " is a non-residue mod " + std::to_string(p.value()));
  }
  std::uint64_t root = tonelli_shanks(a.value(), p.value());
  std::uint64_t other = p.value() - root;
  if (other < root) std::swap(root, other);
  return {FieldElement(root, p), FieldElement(other, p)};
}

FieldElement cube_root(const FieldElement& a) {
  const PrimeModulus& p = a.modulus();
  if (!p.mec_admissible()) {
    throw Error(ErrorKind::NotAdmissible,
                "cube roots are unique only for p = 2 (mod 3); p = " + std::to_string(p.value()));
  }
  return FieldElement(cube_root_mod(a.value(), p), p);
}

FieldElement smallest_qnr(const PrimeModulus& p) {
  std::uint64_t a = 2;
  while (a < p.value() && euler_criterion(a, p.value())) ++a;
  return FieldElement(a, p);
}

}  // namespace mecforge
