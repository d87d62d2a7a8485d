#pragma once

#include <cstdint>

namespace mecforge {

/// Element of GF(2^8) = GF(2)[x] / (reduction polynomial). The default
/// polynomial x^8 + x^4 + x^3 + x + 1 is the one AES uses.
class Gf256 {
public:
  static constexpr std::uint16_t kAesPolynomial = 0x11B;

  constexpr Gf256() = default;
  constexpr explicit Gf256(std::uint8_t bits, std::uint16_t poly = kAesPolynomial)
      : bits_(bits), poly_(poly) {}

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr std::uint16_t polynomial() const { return poly_; }
  constexpr bool is_zero() const { return bits_ == 0; }

  constexpr Gf256 operator+(Gf256 o) const { return Gf256(bits_ ^ o.bits_, poly_); }
  constexpr Gf256 operator*(Gf256 o) const {
    std::uint16_t a = bits_;
    std::uint8_t b = o.bits_;
    std::uint8_t r = 0;
    while (b != 0) {
      if (b & 1) r ^= static_cast<std::uint8_t>(a);
      a <<= 1;
      if (a & 0x100) a ^= poly_;
      b >>= 1;
    }
    return Gf256(r, poly_);
  }
  constexpr Gf256& operator+=(Gf256 o) { return *this = *this + o; }
  constexpr Gf256& operator*=(Gf256 o) { return *this = *this * o; }

  constexpr Gf256 pow(unsigned e) const {
    Gf256 result(1, poly_), base = *this;
    while (e != 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  /// a^254; 0 maps to 0.
  constexpr Gf256 inverse() const { return pow(254); }

  friend constexpr bool operator==(Gf256 a, Gf256 b) { return a.bits_ == b.bits_; }

private:
  std::uint8_t bits_ = 0;
  std::uint16_t poly_ = kAesPolynomial;
};

}  // namespace mecforge
