#include "mecforge/ordering.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "mecforge/error.hpp"
#include "mecforge/generator.hpp"

namespace mecforge {

std::string_view to_string(OrderingKind kind) {
  switch (kind) {
    case OrderingKind::Natural: return "natural";
    case OrderingKind::Diffusion: return "diffusion";
    case OrderingKind::ModuloDiffusion: return "modulo";
  }
  return "natural";
}

OrderingKind parse_ordering(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "natural" || lower == "n") return OrderingKind::Natural;
  if (lower == "diffusion" || lower == "d") return OrderingKind::Diffusion;
  if (lower == "modulo" || lower == "m") return OrderingKind::ModuloDiffusion;
  throw Error(ErrorKind::Parse,
              "unknown ordering '" + std::string(name) + "' (expected natural, diffusion or modulo)");
}

std::strong_ordering compare_points(OrderingKind kind, const CurvePoint& a, const CurvePoint& b,
                                    std::uint64_t p) noexcept {
  return order_key(kind, a, p) <=> order_key(kind, b, p);
}

std::vector<CurvePoint> sort_points(OrderingKind kind, std::vector<CurvePoint> points,
                                    std::uint64_t p) {
  std::stable_sort(points.begin(), points.end(), [&](const CurvePoint& a, const CurvePoint& b) {
    return order_key(kind, a, p) < order_key(kind, b, p);
  });
  return points;
}

std::vector<std::uint64_t> rank_of_y(OrderingKind kind, const MordellCurve& curve,
                                     std::span<const std::uint64_t> ys) {
  std::vector<CurvePoint> points;
  points.reserve(ys.size());
  for (std::uint64_t y : ys) {
    if (y >= curve.p()) {
      throw Error(ErrorKind::OutOfRange, "y = " + std::to_string(y) + " is not in [0, p-1]");
    }
    points.push_back(point_for_y(curve, y));
  }
  points = sort_points(kind, std::move(points), curve.p());
  std::vector<std::uint64_t> out;
  out.reserve(points.size());
  for (const auto& pt : points) out.push_back(pt.y);
  return out;
}

std::vector<std::uint64_t> ordered_complete_set(OrderingKind kind, const MordellCurve& curve,
                                                const CompleteSet& set) {
  if (set.modulus() != curve.modulus()) {
    throw Error(ErrorKind::SizeMismatch, "complete set was built for a different prime");
  }
  std::vector<std::uint64_t> ordered = rank_of_y(kind, curve, set.elements());
  for (auto& y : ordered) y %= set.m();
  return ordered;
}

}  // namespace mecforge
