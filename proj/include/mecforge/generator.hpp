#pragma once

// S-box and pseudo-random sequence generation from ordered Mordell curves.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mecforge/mec.hpp"
#include "mecforge/ordering.hpp"

namespace mecforge {

/// m integers in [0, p - 1], pairwise incongruent mod m.
class CompleteSet {
public:
  /// Throws Error{WrongSize}, Error{OutOfRange} or Error{DuplicateResidue}.
  static CompleteSet validate(std::vector<std::uint64_t> elements, std::uint64_t m,
                              const PrimeModulus& p);

  /// [0, m - 1]. Requires 1 <= m <= p.
  static CompleteSet natural(std::uint64_t m, const PrimeModulus& p);

  /// One element drawn uniformly from each residue class mod m.
  static CompleteSet random(std::uint64_t m, const PrimeModulus& p, std::mt19937_64& rng);

  const std::vector<std::uint64_t>& elements() const noexcept { return elements_; }
  std::uint64_t m() const noexcept { return elements_.size(); }
  const PrimeModulus& modulus() const noexcept { return p_; }

private:
  CompleteSet(std::vector<std::uint64_t> elements, const PrimeModulus& p)
      : elements_(std::move(elements)), p_(p) {}

  std::vector<std::uint64_t> elements_;
  PrimeModulus p_;
};

struct Provenance {
  std::uint64_t p = 0;
  std::uint64_t b = 0;
  OrderingKind ordering = OrderingKind::Natural;
  std::uint64_t k = 0;
  std::string set_label;
  std::string algorithm;
};

/// A bijection on [0, m - 1].
struct SBox {
  std::vector<std::uint64_t> table;
  Provenance provenance;

  std::uint64_t m() const noexcept { return table.size(); }
};

/// A finite sequence of residues mod m, one per element of A.
struct SprnSequence {
  std::vector<std::uint64_t> values;
  std::uint64_t m = 1;
  Provenance provenance;
};

/// Production path for sigma(p, b, order, Y, k): x-coordinates by cube root,
/// one sort, then the k-rotation. Throws Error{BadShift} for k >= m and
/// Error{SizeMismatch} if Y was built for a different prime.
SBox sbox_direct(const MordellCurve& curve, OrderingKind kind, const CompleteSet& set,
                 std::uint64_t k);

/// Isomorphism path: points of E_{p, t^6 R} are obtained from the class
/// representative E_{p, R} as (t^2 x', y) with x' the partner of y' = t^-3 y.
/// Output equals sbox_direct on E_{p, t^6 R}.
/// Throws Error{NotRepresentative} unless R is 1 or the smallest non-residue.
SBox sbox_iso(const MordellCurve& representative_curve, const FieldElement& t_inverse,
              OrderingKind kind, const CompleteSet& set, std::uint64_t k);

/// gamma(p, b, order, A, m, k): A sorted by the induced order, entry i is the
/// element at position (i + k) mod |A| reduced mod m.
/// Throws Error{EmptySet}, Error{OutOfRange}, Error{DuplicateResidue},
/// Error{BadModulus} (m outside [1, |A|]) or Error{BadShift} (k >= m).
SprnSequence sprn(const MordellCurve& curve, OrderingKind kind, std::span<const std::uint64_t> set,
                  std::uint64_t m, std::uint64_t k);

/// Isomorphism path for sequences: builds gamma(p, t^6 R, order, t^3 Y, m, k)
/// from points of the representative curve E_{p, R}.
SprnSequence sprn_iso(const MordellCurve& representative_curve, const FieldElement& t,
                      OrderingKind kind, std::span<const std::uint64_t> preimage,
                      std::uint64_t m, std::uint64_t k);

using BigInt = boost::multiprecision::cpp_int;

struct SboxCount {
  BigInt per_k;  ///< number of (m, p)-complete sets
  BigInt total;  ///< m * per_k, counting every shift k
};

/// (q + 1)^r q^(m - r) with p = m q + r. Throws Error{BadModulus} unless 1 <= m <= p.
SboxCount count_sboxes(std::uint64_t p, std::uint64_t m);

/// Default p limit for pstar. 2^16 unless MECFORGE_MAX_PSTAR_P is set.
std::uint64_t pstar_limit();

/// Largest m <= p - 1 for which two distinct curves over F_p give the same
/// natural (m, p)-complete S-box with k = 0; 0 if no pair ever collides.
/// Throws Error{TooLarge} above `limit`.
std::uint64_t pstar(const PrimeModulus& p, OrderingKind kind,
                    std::uint64_t limit = pstar_limit());

struct PstarRow {
  std::uint64_t p = 0;
  std::uint64_t pstar = 0;
};

/// pstar for every admissible prime in [lo, hi], in increasing p. Parallel over primes.
std::vector<PstarRow> pstar_range(std::uint64_t lo, std::uint64_t hi, OrderingKind kind,
                                  std::uint64_t limit = pstar_limit());

/// Curves addressed directly by b, or by class representative plus t values.
struct ByParameter {
  std::vector<std::uint64_t> b_values;
};
struct ByIsomorphism {
  CurveClass curve_class = CurveClass::C1;
  std::vector<std::uint64_t> t_values;
};
using FamilySpec = std::variant<ByParameter, ByIsomorphism>;

struct FamilyItem {
  std::uint64_t b = 0;
  std::optional<std::uint64_t> t;
  std::optional<SBox> sbox;
  std::string error;
};

/// One S-box per curve parameter, in parameter order. Failures are recorded on
/// the item rather than thrown. Parallel over items.
std::vector<FamilyItem> enumerate_family(const PrimeModulus& p, OrderingKind kind,
                                         const CompleteSet& set, std::uint64_t k,
                                         const FamilySpec& spec);

/// One S-box per complete set on a fixed curve, in input order. Parallel over sets.
std::vector<SBox> sbox_family_over_sets(const MordellCurve& curve, OrderingKind kind,
                                        std::span<const CompleteSet> sets, std::uint64_t k);

/// `count` complete sets drawn with CompleteSet::random from a generator seeded with `seed`.
std::vector<CompleteSet> random_complete_sets(std::uint64_t m, const PrimeModulus& p,
                                              std::uint64_t count, std::uint64_t seed);

/// Every b in [1, p - 1].
ByParameter all_parameters(const PrimeModulus& p);

}  // namespace mecforge
