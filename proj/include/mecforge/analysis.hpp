#pragma once

// Cryptographic quality metrics for S-boxes and randomness tests for
// sequences. The heavy kernels run in parallel with OpenMP; the serial
// versions in reference.hpp compute the same quantities from the definitions.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mecforge/generator.hpp"

namespace mecforge {

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// n x n matrix of counts sharing one denominator. For BIC the diagonal is
/// undefined and excluded from the summary.
struct BitMatrix {
  unsigned n = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t denominator = 1;
  bool diagonal_defined = true;

  double at(unsigned i, unsigned j) const {
    return static_cast<double>(counts[i * n + j]) / static_cast<double>(denominator);
  }
  Rational min() const;
  Rational max() const;
};

/// log2(m); throws Error{NotPowerOfTwo} unless m = 2^n with n >= 1, and
/// Error{OutOfRange} if an entry is >= m.
unsigned sbox_bits(std::span<const std::uint64_t> table);

/// 2^(n-1) - max|W(a, b)| / 2 over b != 0.
std::uint64_t nonlinearity(const SBox& sbox);

/// max |#{x : a.x = b.S(x)} - 2^(n-1)| / 2^n over (a, b) != (0, 0).
Rational lap(const SBox& sbox);

/// Largest difference-distribution entry over dx != 0, divided by 2^n.
Rational dap(const SBox& sbox);

/// Coefficients of the interpolating polynomial of S over GF(2^8)/0x11B,
/// index k holding the coefficient of X^k. Throws Error{UnsupportedSize} unless m = 256.
std::vector<std::uint8_t> gf256_interpolate(const SBox& sbox);

/// Number of nonzero coefficients of gf256_interpolate.
std::uint64_t algebraic_complexity(const SBox& sbox);

/// Entry (i, j): fraction of x for which flipping input bit j flips output bit i.
BitMatrix sac_matrix(const SBox& sbox);

/// Entry (i, r), i != r: SAC of the output-bit pair S_i xor S_r averaged over
/// the n input bits. Denominator n * 2^n.
BitMatrix bic_matrix(const SBox& sbox);

std::uint64_t fixed_points(const SBox& sbox);

/// Pearson correlation of the two tables; NaN if either is constant.
/// Throws Error{SizeMismatch} for different sizes.
double correlation(const SBox& a, const SBox& b);

std::uint64_t distinct_count(std::span<const SBox> family);

struct CorrelationSummary {
  double lower = 0;
  double average = 0;
  double upper = 0;
  std::uint64_t pairs = 0;
};

/// Pairwise correlation over every unordered pair in the family. Parallel over rows.
CorrelationSummary pairwise_correlation(std::span<const SBox> family);

struct Histogram {
  std::map<std::uint64_t, std::uint64_t> frequency;
  std::uint64_t length = 0;
};

Histogram histogram(std::span<const std::uint64_t> values);

/// Shannon entropy in bits. Throws Error{EmptySequence}.
double entropy(std::span<const std::uint64_t> values);
double entropy(const Histogram& h);

/// Least h >= 1 with values[i + h] = values[i] for every valid i. Throws Error{EmptySequence}.
std::uint64_t period(std::span<const std::uint64_t> values);

struct SboxReport {
  std::uint64_t m = 0;
  std::optional<std::uint64_t> nl;
  std::optional<Rational> lap;
  std::optional<Rational> dap;
  std::optional<std::uint64_t> ac;
  std::optional<Rational> sac_min, sac_max;
  std::optional<Rational> bic_min, bic_max;
  std::uint64_t fixed_points = 0;
  bool bijective = false;
  std::vector<std::string> unsupported;  ///< metric name plus reason
};

/// Every metric that applies to the table; the rest are listed in `unsupported`.
SboxReport analyze_sbox(const SBox& sbox);

struct SequenceReport {
  std::uint64_t length = 0;
  std::uint64_t m = 0;
  Histogram histogram;
  double entropy = 0;
  double log2_m = 0;
  double log2_observed = 0;  ///< log2 of the number of distinct symbols seen
  std::uint64_t period = 0;
};

SequenceReport analyze_sequence(const SprnSequence& seq);

}  // namespace mecforge
