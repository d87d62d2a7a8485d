#include "mecforge/mec.hpp"

#include <cstdlib>
#include <string>

#include "mecforge/error.hpp"

namespace mecforge {

std::string_view to_string(CurveClass c) { return c == CurveClass::C1 ? "C1" : "C2"; }

MordellCurve::MordellCurve(const PrimeModulus& p, std::uint64_t b) : p_(p), b_(b) {
  if (!p.mec_admissible()) {
    throw Error(ErrorKind::NotAdmissible, "p must be prime with p ≡ 2 (mod 3); got p = " +
                                              std::to_string(p.value()));
  }
  if (b == 0 || b >= p.value()) {
    throw Error(ErrorKind::OutOfRange,
                "b must lie in [1, p-1]; got b = " + std::to_string(b));
  }
}

bool MordellCurve::contains(const CurvePoint& pt) const noexcept {
  const std::uint64_t p = p_.value();
  if (pt.x >= p || pt.y >= p) return false;
  const std::uint64_t lhs = mul_mod(pt.y, pt.y, p);
  const std::uint64_t rhs = add_mod(mul_mod(mul_mod(pt.x, pt.x, p), pt.x, p), b_, p);
  return lhs == rhs;
}

std::uint64_t x_for_y(const MordellCurve& curve, std::uint64_t y) noexcept {
  const std::uint64_t p = curve.p();
  return cube_root_mod(sub_mod(mul_mod(y, y, p), curve.b(), p), curve.modulus());
}

std::uint64_t enumeration_limit() {
  if (const char* env = std::getenv("MECFORGE_MAX_P")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 26;
}

std::vector<CurvePoint> enumerate_points(const MordellCurve& curve, std::uint64_t limit) {
  if (curve.p() > limit) {
    throw Error(ErrorKind::TooLarge, "p = " + std::to_string(curve.p()) +
                                         " exceeds the enumeration limit " + std::to_string(limit));
  }
  std::vector<CurvePoint> points;
  points.reserve(curve.p());
  for (std::uint64_t y = 0; y < curve.p(); ++y) points.push_back(point_for_y(curve, y));
  return points;
}

CurveClass classify(const MordellCurve& curve) {
  return is_quadratic_residue(FieldElement(curve.b(), curve.modulus())) ? CurveClass::C1
                                                                        : CurveClass::C2;
}

std::uint64_t representative(const PrimeModulus& p, CurveClass c) {
  return c == CurveClass::C1 ? 1 : smallest_qnr(p).value();
}

CurvePoint iso_map_point(const CurvePoint& pt, const FieldElement& t) {
  if (t.is_zero()) throw Error(ErrorKind::ZeroParameter, "isomorphism parameter t must be nonzero");
  const std::uint64_t p = t.p();
  const std::uint64_t t2 = mul_mod(t.value(), t.value(), p);
  const std::uint64_t t3 = mul_mod(t2, t.value(), p);
  return {mul_mod(t2, pt.x % p, p), mul_mod(t3, pt.y % p, p)};
}

std::uint64_t iso_image_parameter(std::uint64_t b, const FieldElement& t) {
  if (t.is_zero()) throw Error(ErrorKind::ZeroParameter, "isomorphism parameter t must be nonzero");
  return mul_mod(b % t.p(), pow_mod(t.value(), 6, t.p()), t.p());
}

std::optional<std::uint64_t> iso_param_between(std::uint64_t b1, std::uint64_t b2,
                                               const PrimeModulus& p) {
  const FieldElement e1(b1, p), e2(b2, p);
  if (e1.is_zero() || e2.is_zero()) {
    throw Error(ErrorKind::ZeroInput, "curve parameters must be nonzero");
  }
  // t^6 = b2 / b1 and cubing is bijective, so t^2 = cbrt(b2 / b1).
  const FieldElement t_squared = cube_root(e2 * mod_inverse(e1));
  if (!is_quadratic_residue(t_squared)) return std::nullopt;
  return sqrt_mod(t_squared).first.value();
}

}  // namespace mecforge
