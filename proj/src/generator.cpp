#include "mecforge/generator.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>

#include "mecforge/error.hpp"

namespace mecforge {

namespace {

using Key = std::pair<std::uint64_t, std::uint64_t>;

struct KeyedY {
  Key key;
  std::uint64_t y;
};

void check_shift(std::uint64_t k, std::uint64_t m) {
  if (k >= m) {
    throw Error(ErrorKind::BadShift,
                "shift k = " + std::to_string(k) + " must be below m = " + std::to_string(m));
  }
}

void sort_by_key(std::vector<KeyedY>& items) {
  std::sort(items.begin(), items.end(),
            [](const KeyedY& a, const KeyedY& b) { return a.key < b.key; });
}

std::vector<std::uint64_t> rotate_and_reduce(const std::vector<KeyedY>& sorted, std::uint64_t m,
                                             std::uint64_t k) {
  const std::size_t n = sorted.size();
  std::vector<std::uint64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = sorted[(i + k) % n].y % m;
  return out;
}

void check_representative(const MordellCurve& curve) {
  if (curve.b() != 1 && curve.b() != smallest_qnr(curve.modulus()).value()) {
    throw Error(ErrorKind::NotRepresentative,
                "b = " + std::to_string(curve.b()) +
                    " is not a class representative (1 or the smallest non-residue)");
  }
}

void check_subset(std::span<const std::uint64_t> set, std::uint64_t p) {
  if (set.empty()) throw Error(ErrorKind::EmptySet, "the input set A is empty");
  std::vector<std::uint64_t> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.back() >= p) {
    throw Error(ErrorKind::OutOfRange,
                "element " + std::to_string(sorted.back()) + " is not in [0, p-1]");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::DuplicateResidue, "the input set A contains a repeated element");
  }
}

void check_sequence_params(std::size_t size, std::uint64_t m, std::uint64_t k) {
  if (m == 0 || m > size) {
    throw Error(ErrorKind::BadModulus, "m = " + std::to_string(m) + " must lie in [1, |A|] = [1, " +
                                           std::to_string(size) + "]");
  }
  check_shift(k, m);
}

}  // namespace

CompleteSet CompleteSet::validate(std::vector<std::uint64_t> elements, std::uint64_t m,
                                  const PrimeModulus& p) {
  if (m == 0 || m > p.value() || elements.size() != m) {
    throw Error(ErrorKind::WrongSize, "an (m, p)-complete set needs exactly m elements with 1 <= m <= p; got " +
                                          std::to_string(elements.size()) + " elements, m = " +
                                          std::to_string(m));
  }
  std::vector<bool> seen(m, false);
  for (std::uint64_t e : elements) {
    if (e >= p.value()) {
      throw Error(ErrorKind::OutOfRange, "element " + std::to_string(e) + " is not in [0, p-1]");
    }
    if (seen[e % m]) {
      throw Error(ErrorKind::DuplicateResidue,
                  "two elements are congruent to " + std::to_string(e % m) + " mod " + std::to_string(m));
    }
    seen[e % m] = true;
  }
  return CompleteSet(std::move(elements), p);
}

CompleteSet CompleteSet::natural(std::uint64_t m, const PrimeModulus& p) {
  if (m == 0 || m > p.value()) {
    throw Error(ErrorKind::WrongSize, "natural complete set needs 1 <= m <= p");
  }
  std::vector<std::uint64_t> elements(m);
  for (std::uint64_t i = 0; i < m; ++i) elements[i] = i;
  return CompleteSet(std::move(elements), p);
}

CompleteSet CompleteSet::random(std::uint64_t m, const PrimeModulus& p, std::mt19937_64& rng) {
  if (m == 0 || m > p.value()) {
    throw Error(ErrorKind::WrongSize, "random complete set needs 1 <= m <= p");
  }
  std::vector<std::uint64_t> elements(m);
  for (std::uint64_t r = 0; r < m; ++r) {
    // Residue r has ceil((p - r) / m) representatives in [0, p - 1].
    const std::uint64_t choices = (p.value() - r + m - 1) / m;
    elements[r] = r + (rng() % choices) * m;
  }
  return CompleteSet(std::move(elements), p);
}

SBox sbox_direct(const MordellCurve& curve, OrderingKind kind, const CompleteSet& set,
                 std::uint64_t k) {
  check_shift(k, set.m());
  if (set.modulus() != curve.modulus()) {
    throw Error(ErrorKind::SizeMismatch, "complete set was built for a different prime");
  }
  const std::uint64_t p = curve.p();
  std::vector<KeyedY> items;
  items.reserve(set.m());
  for (std::uint64_t y : set.elements()) {
    items.push_back({order_key(kind, point_for_y(curve, y), p), y});
  }
  sort_by_key(items);
  return SBox{rotate_and_reduce(items, set.m(), k),
              Provenance{p, curve.b(), kind, k, {}, "direct"}};
}

SBox sbox_iso(const MordellCurve& representative_curve, const FieldElement& t_inverse,
              OrderingKind kind, const CompleteSet& set, std::uint64_t k) {
  check_shift(k, set.m());
  check_representative(representative_curve);
  if (set.modulus() != representative_curve.modulus() ||
      t_inverse.modulus() != representative_curve.modulus()) {
    throw Error(ErrorKind::SizeMismatch, "inputs were built for different primes");
  }
  const FieldElement t = mod_inverse(t_inverse);
  const std::uint64_t p = representative_curve.p();
  const std::uint64_t t_squared = mul_mod(t.value(), t.value(), p);
  const std::uint64_t t_inverse_cubed = pow_mod(t_inverse.value(), 3, p);

  std::vector<KeyedY> items;
  items.reserve(set.m());
  for (std::uint64_t y : set.elements()) {
    const std::uint64_t y_rep = mul_mod(t_inverse_cubed, y, p);
    const CurvePoint pt{mul_mod(t_squared, x_for_y(representative_curve, y_rep), p), y};
    items.push_back({order_key(kind, pt, p), y});
  }
  sort_by_key(items);
  const std::uint64_t b = iso_image_parameter(representative_curve.b(), t);
  return SBox{rotate_and_reduce(items, set.m(), k), Provenance{p, b, kind, k, {}, "isomorphism"}};
}

SprnSequence sprn(const MordellCurve& curve, OrderingKind kind, std::span<const std::uint64_t> set,
                  std::uint64_t m, std::uint64_t k) {
  check_subset(set, curve.p());
  check_sequence_params(set.size(), m, k);
  const std::uint64_t p = curve.p();
  std::vector<KeyedY> items;
  items.reserve(set.size());
  for (std::uint64_t y : set) items.push_back({order_key(kind, point_for_y(curve, y), p), y});
  sort_by_key(items);
  return SprnSequence{rotate_and_reduce(items, m, k), m,
                      Provenance{p, curve.b(), kind, k, {}, "direct"}};
}

SprnSequence sprn_iso(const MordellCurve& representative_curve, const FieldElement& t,
                      OrderingKind kind, std::span<const std::uint64_t> preimage,
                      std::uint64_t m, std::uint64_t k) {
  check_representative(representative_curve);
  check_subset(preimage, representative_curve.p());
  check_sequence_params(preimage.size(), m, k);
  if (t.is_zero()) throw Error(ErrorKind::ZeroParameter, "isomorphism parameter t must be nonzero");
  const std::uint64_t p = representative_curve.p();
  std::vector<KeyedY> items;
  items.reserve(preimage.size());
  for (std::uint64_t y : preimage) {
    const CurvePoint pt = iso_map_point(point_for_y(representative_curve, y), t);
    items.push_back({order_key(kind, pt, p), pt.y});
  }
  sort_by_key(items);
  const std::uint64_t b = iso_image_parameter(representative_curve.b(), t);
  return SprnSequence{rotate_and_reduce(items, m, k), m,
                      Provenance{p, b, kind, k, {}, "isomorphism"}};
}

SboxCount count_sboxes(std::uint64_t p, std::uint64_t m) {
  if (m == 0 || m > p) {
    throw Error(ErrorKind::BadModulus, "count needs 1 <= m <= p");
  }
  const std::uint64_t q = p / m;
  const std::uint64_t r = p % m;
  BigInt per_k = boost::multiprecision::pow(BigInt(q + 1), static_cast<unsigned>(r)) *
                 boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(m - r));
  BigInt total = per_k * m;
  return {std::move(per_k), std::move(total)};
}

std::uint64_t pstar_limit() {
  if (const char* env = std::getenv("MECFORGE_MAX_PSTAR_P")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 16;
}

std::uint64_t pstar(const PrimeModulus& p, OrderingKind kind, std::uint64_t limit) {
  if (p.value() > limit) {
    throw Error(ErrorKind::TooLarge, "p = " + std::to_string(p.value()) +
                                         " exceeds the p* limit " + std::to_string(limit));
  }
  if (!p.mec_admissible()) {
    throw Error(ErrorKind::NotAdmissible, "p must be prime with p ≡ 2 (mod 3)");
  }
  const std::uint64_t pv = p.value();

  // The natural S-box of size m lists [0, m - 1] in curve order, so the size
  // m + 1 box is the size m box with m inserted. Curves that agree at m + 1
  // agree at m; track groups of agreeing curves and refine by insertion index.
  struct Active {
    MordellCurve curve;
    std::vector<Key> keys;  // sorted keys of the points carrying y < m
    std::uint64_t group;
  };
  std::vector<Active> active;
  active.reserve(pv - 1);
  for (std::uint64_t b = 1; b < pv; ++b) {
    MordellCurve curve(p, b);
    active.push_back({curve, {order_key(kind, point_for_y(curve, 0), pv)}, 0});
  }

  std::uint64_t last_collision = active.size() >= 2 ? 1 : 0;
  for (std::uint64_t m = 2; m <= pv - 1 && active.size() >= 2; ++m) {
    const std::uint64_t y = m - 1;
    std::map<std::pair<std::uint64_t, std::size_t>, std::uint64_t> next_group;
    std::map<std::uint64_t, std::size_t> group_size;
    for (auto& a : active) {
      const Key key = order_key(kind, point_for_y(a.curve, y), pv);
      const auto it = std::lower_bound(a.keys.begin(), a.keys.end(), key);
      const auto pos = static_cast<std::size_t>(it - a.keys.begin());
      a.keys.insert(it, key);
      const auto [slot, fresh] = next_group.try_emplace({a.group, pos}, next_group.size());
      a.group = slot->second;
      ++group_size[a.group];
    }
    std::erase_if(active, [&](const Active& a) { return group_size[a.group] < 2; });
    if (!active.empty()) last_collision = m;
  }
  return last_collision;
}

std::vector<PstarRow> pstar_range(std::uint64_t lo, std::uint64_t hi, OrderingKind kind,
                                  std::uint64_t limit) {
  if (hi > limit) {
    throw Error(ErrorKind::TooLarge, "prime range upper bound " + std::to_string(hi) +
                                         " exceeds the p* limit " + std::to_string(limit));
  }
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 5); n <= hi; ++n) {
    if (n % 3 == 2 && is_prime(n)) primes.push_back(n);
  }
  std::vector<PstarRow> rows(primes.size());
  const auto count = static_cast<std::int64_t>(primes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    rows[i] = {primes[i], pstar(PrimeModulus(primes[i]), kind, limit)};
  }
  return rows;
}

std::vector<SBox> sbox_family_over_sets(const MordellCurve& curve, OrderingKind kind,
                                        std::span<const CompleteSet> sets, std::uint64_t k) {
  for (const auto& s : sets) check_shift(k, s.m());
  std::vector<SBox> out(sets.size());
  const auto count = static_cast<std::int64_t>(sets.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) out[i] = sbox_direct(curve, kind, sets[i], k);
  return out;
}

std::vector<CompleteSet> random_complete_sets(std::uint64_t m, const PrimeModulus& p,
                                              std::uint64_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CompleteSet> sets;
  sets.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) sets.push_back(CompleteSet::random(m, p, rng));
  return sets;
}

ByParameter all_parameters(const PrimeModulus& p) {
  ByParameter spec;
  spec.b_values.reserve(p.value() - 1);
  for (std::uint64_t b = 1; b < p.value(); ++b) spec.b_values.push_back(b);
  return spec;
}

std::vector<FamilyItem> enumerate_family(const PrimeModulus& p, OrderingKind kind,
                                         const CompleteSet& set, std::uint64_t k,
                                         const FamilySpec& spec) {
  std::vector<FamilyItem> items;
  std::optional<MordellCurve> rep_curve;
  if (const auto* by_b = std::get_if<ByParameter>(&spec)) {
    for (std::uint64_t b : by_b->b_values) items.push_back({b, std::nullopt, std::nullopt, {}});
  } else {
    const auto& by_t = std::get<ByIsomorphism>(spec);
    const std::uint64_t rep = representative(p, by_t.curve_class);
    rep_curve.emplace(p, rep);
    for (std::uint64_t t : by_t.t_values) {
      FamilyItem item{0, t, std::nullopt, {}};
      if (t % p.value() != 0) item.b = iso_image_parameter(rep, FieldElement(t, p));
      items.push_back(std::move(item));
    }
  }

  const auto count = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < count; ++i) {
    FamilyItem& item = items[i];
    try {
      if (item.t) {
        const FieldElement t(*item.t, p);
        item.sbox = sbox_iso(*rep_curve, mod_inverse(t), kind, set, k);
      } else {
        item.sbox = sbox_direct(MordellCurve(p, item.b), kind, set, k);
      }
    } catch (const std::exception& e) {
      item.error = e.what();
    }
  }
  return items;
}

}  // namespace mecforge
