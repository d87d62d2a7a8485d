#pragma once

// Mordell curves y^2 = x^3 + b over F_p with p = 2 (mod 3).
//
// For these primes cubing is a bijection on F_p, so every y in [0, p - 1]
// has exactly one partner x = cbrt(y^2 - b). The curve therefore has p
// affine points plus the identity, which is never materialised here.

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mecforge/field.hpp"

namespace mecforge {

struct CurvePoint {
  std::uint64_t x = 0;
  std::uint64_t y = 0;

  friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

enum class CurveClass { C1, C2 };

std::string_view to_string(CurveClass c);

class MordellCurve {
public:
  /// Throws Error{NotAdmissible} unless p = 2 (mod 3), Error{OutOfRange} unless 1 <= b <= p - 1.
  MordellCurve(const PrimeModulus& p, std::uint64_t b);
  MordellCurve(std::uint64_t p, std::uint64_t b) : MordellCurve(PrimeModulus(p), b) {}

  const PrimeModulus& modulus() const noexcept { return p_; }
  std::uint64_t p() const noexcept { return p_.value(); }
  std::uint64_t b() const noexcept { return b_; }

  bool contains(const CurvePoint& pt) const noexcept;

  friend bool operator==(const MordellCurve&, const MordellCurve&) = default;

private:
  PrimeModulus p_;
  std::uint64_t b_;
};

/// The unique x with x^3 = y^2 - b; O(log p).
std::uint64_t x_for_y(const MordellCurve& curve, std::uint64_t y) noexcept;

inline CurvePoint point_for_y(const MordellCurve& curve, std::uint64_t y) noexcept {
  return {x_for_y(curve, y), y};
}

/// Largest p accepted by enumerate_points. 2^26 unless MECFORGE_MAX_P is set.
std::uint64_t enumeration_limit();

/// All p affine points, one per y in increasing y. Throws Error{TooLarge} above `limit`.
std::vector<CurvePoint> enumerate_points(const MordellCurve& curve,
                                         std::uint64_t limit = enumeration_limit());

/// C1 iff b is a quadratic residue (equivalently, (0, y) lies on the curve for some y != 0).
CurveClass classify(const MordellCurve& curve);

/// 1 for C1; the smallest quadratic non-residue for C2.
std::uint64_t representative(const PrimeModulus& p, CurveClass c);

/// (t^2 x, t^3 y), which lies on E_{p, t^6 b}. Throws Error{ZeroParameter} for t = 0.
CurvePoint iso_map_point(const CurvePoint& pt, const FieldElement& t);

/// b * t^6, the curve parameter reached by iso_map_point with parameter t.
std::uint64_t iso_image_parameter(std::uint64_t b, const FieldElement& t);

/// The t in [1, (p - 1)/2] with t^6 b1 = b2, or nullopt when the curves lie in
/// different classes. Throws Error{ZeroInput} if b1 or b2 is zero.
std::optional<std::uint64_t> iso_param_between(std::uint64_t b1, std::uint64_t b2,
                                               const PrimeModulus& p);

}  // namespace mecforge
