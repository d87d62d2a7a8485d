#pragma once

// Total orders on the affine points of a Mordell curve and the orders they
// induce on sets of y-coordinates.

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mecforge/mec.hpp"

namespace mecforge {

class CompleteSet;

enum class OrderingKind {
  Natural,          ///< (x, y) lexicographic
  Diffusion,        ///< integer sum x + y, ties broken by x
  ModuloDiffusion,  ///< (x + y) mod p, ties broken by x
};

std::string_view to_string(OrderingKind kind);

/// Accepts "natural", "diffusion" or "modulo", case-insensitively.
/// Throws Error{Parse} for anything else.
OrderingKind parse_ordering(std::string_view name);

/// Sort key realising `kind`: comparing keys lexicographically is the order.
/// Both components fit in 64 bits for p < 2^63.
inline std::pair<std::uint64_t, std::uint64_t> order_key(OrderingKind kind, const CurvePoint& pt,
                                                         std::uint64_t p) noexcept {
  switch (kind) {
    case OrderingKind::Natural: return {pt.x, pt.y};
    case OrderingKind::Diffusion: return {pt.x + pt.y, pt.x};
    case OrderingKind::ModuloDiffusion: return {add_mod(pt.x, pt.y, p), pt.x};
  }
  return {pt.x, pt.y};
}

std::strong_ordering compare_points(OrderingKind kind, const CurvePoint& a, const CurvePoint& b,
                                    std::uint64_t p) noexcept;

/// Sorted copy of `points` (pairwise distinct, all on one curve over F_p).
std::vector<CurvePoint> sort_points(OrderingKind kind, std::vector<CurvePoint> points,
                                    std::uint64_t p);

/// `ys` sorted by the position of their unique curve points (the induced order on y).
std::vector<std::uint64_t> rank_of_y(OrderingKind kind, const MordellCurve& curve,
                                     std::span<const std::uint64_t> ys);

/// [0, m - 1] ordered so that residue r comes before s iff the point carrying
/// the element of Y congruent to r precedes the point carrying the element
/// congruent to s.
std::vector<std::uint64_t> ordered_complete_set(OrderingKind kind, const MordellCurve& curve,
                                                const CompleteSet& set);

}  // namespace mecforge
