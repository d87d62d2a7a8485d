#include "mecforge/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "mecforge/error.hpp"
#include "mecforge/gf256.hpp"

namespace mecforge {

namespace {

inline unsigned parity(std::uint64_t v) { return static_cast<unsigned>(std::popcount(v) & 1); }

void fwht(std::vector<std::int64_t>& f) {
  const std::size_t size = f.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = f[j], b = f[j + h];
        f[j] = a + b;
        f[j + h] = a - b;
      }
    }
  }
}

std::uint64_t max_walsh(const std::vector<std::uint64_t>& s, unsigned n) {
  const std::int64_t size = std::int64_t{1} << n;
  std::uint64_t best = 0;
#pragma omp parallel for reduction(max : best) schedule(static)
  for (std::int64_t beta = 1; beta < size; ++beta) {
    std::vector<std::int64_t> f(static_cast<std::size_t>(size));
    for (std::int64_t x = 0; x < size; ++x) f[x] = parity(s[x] & beta) ? -1 : 1;
    fwht(f);
    for (std::int64_t v : f) best = std::max<std::uint64_t>(best, static_cast<std::uint64_t>(std::llabs(v)));
  }
  return best;
}

Rational summarise(const BitMatrix& m, bool want_max) {
  std::uint64_t best = want_max ? 0 : std::numeric_limits<std::uint64_t>::max();
  for (unsigned i = 0; i < m.n; ++i) {
    for (unsigned j = 0; j < m.n; ++j) {
      if (!m.diagonal_defined && i == j) continue;
      const std::uint64_t c = m.counts[i * m.n + j];
      best = want_max ? std::max(best, c) : std::min(best, c);
    }
  }
  return {best, m.denominator};
}

}  // namespace

Rational BitMatrix::min() const { return summarise(*this, false); }
Rational BitMatrix::max() const { return summarise(*this, true); }

unsigned sbox_bits(std::span<const std::uint64_t> table) {
  const std::uint64_t m = table.size();
  if (m < 2 || !std::has_single_bit(m)) {
    throw Error(ErrorKind::NotPowerOfTwo,
                "metric needs a table of size 2^n, n >= 1; got m = " + std::to_string(m));
  }
  for (std::uint64_t v : table) {
    if (v >= m) throw Error(ErrorKind::OutOfRange, "table entry " + std::to_string(v) + " >= m");
  }
  return static_cast<unsigned>(std::countr_zero(m));
}

std::uint64_t nonlinearity(const SBox& sbox) {
  const unsigned n = sbox_bits(sbox.table);
  return (std::uint64_t{1} << (n - 1)) - max_walsh(sbox.table, n) / 2;
}

Rational lap(const SBox& sbox) {
  const unsigned n = sbox_bits(sbox.table);
  // |#{a.x = b.S(x)} - 2^(n-1)| = |W(a, b)| / 2, and b = 0 only contributes 0.
  return {max_walsh(sbox.table, n) / 2, std::uint64_t{1} << n};
}

Rational dap(const SBox& sbox) {
  const unsigned n = sbox_bits(sbox.table);
  const std::int64_t size = std::int64_t{1} << n;
  const auto& s = sbox.table;
  std::uint64_t best = 0;
#pragma omp parallel for reduction(max : best) schedule(static)
  for (std::int64_t dx = 1; dx < size; ++dx) {
    std::vector<std::uint64_t> row(static_cast<std::size_t>(size), 0);
    for (std::int64_t x = 0; x < size; ++x) ++row[s[x ^ dx] ^ s[x]];
    best = std::max(best, *std::max_element(row.begin(), row.end()));
  }
  return {best, static_cast<std::uint64_t>(size)};
}

std::vector<std::uint8_t> gf256_interpolate(const SBox& sbox) {
  if (sbox.m() != 256) {
    throw Error(ErrorKind::UnsupportedSize,
                "algebraic complexity is defined for 8-bit S-boxes only; got m = " +
                    std::to_string(sbox.m()));
  }
  sbox_bits(sbox.table);
  // f(X) = sum_a S(a) (1 - (X - a)^255). In characteristic 2 every binomial
  // C(255, k) is odd, so the X^k coefficient is sum_a S(a) a^(255 - k) for
  // 1 <= k <= 255 (with 0^0 = 1), and the constant term is S(0).
  std::vector<std::uint8_t> coeffs(256, 0);
  coeffs[0] = static_cast<std::uint8_t>(sbox.table[0]);
#pragma omp parallel for schedule(static)
  for (int k = 1; k < 256; ++k) {
    Gf256 acc;
    for (unsigned a = 1; a < 256; ++a) {
      acc += Gf256(static_cast<std::uint8_t>(sbox.table[a])) *
             Gf256(static_cast<std::uint8_t>(a)).pow(static_cast<unsigned>(255 - k));
    }
    if (k == 255) acc += Gf256(static_cast<std::uint8_t>(sbox.table[0]));
    coeffs[k] = acc.bits();
  }
  return coeffs;
}

std::uint64_t algebraic_complexity(const SBox& sbox) {
  const auto coeffs = gf256_interpolate(sbox);
  return static_cast<std::uint64_t>(
      std::count_if(coeffs.begin(), coeffs.end(), [](std::uint8_t c) { return c != 0; }));
}

BitMatrix sac_matrix(const SBox& sbox) {
  const unsigned n = sbox_bits(sbox.table);
  const std::uint64_t size = std::uint64_t{1} << n;
  const auto& s = sbox.table;
  BitMatrix out{n, std::vector<std::uint64_t>(n * n, 0), size, true};
  const int cells = static_cast<int>(n * n);
#pragma omp parallel for schedule(static)
  for (int cell = 0; cell < cells; ++cell) {
    const unsigned i = static_cast<unsigned>(cell) / n, j = static_cast<unsigned>(cell) % n;
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < size; ++x) count += ((s[x ^ (1ULL << j)] ^ s[x]) >> i) & 1;
    out.counts[cell] = count;
  }
  return out;
}

BitMatrix bic_matrix(const SBox& sbox) {
  const unsigned n = sbox_bits(sbox.table);
  const std::uint64_t size = std::uint64_t{1} << n;
  const auto& s = sbox.table;
  BitMatrix out{n, std::vector<std::uint64_t>(n * n, 0), n * size, false};
  const int cells = static_cast<int>(n * n);
#pragma omp parallel for schedule(static)
  for (int cell = 0; cell < cells; ++cell) {
    const unsigned i = static_cast<unsigned>(cell) / n, r = static_cast<unsigned>(cell) % n;
    if (i == r) continue;
    std::uint64_t count = 0;
    for (unsigned j = 0; j < n; ++j) {
      for (std::uint64_t x = 0; x < size; ++x) {
        const std::uint64_t d = s[x ^ (1ULL << j)] ^ s[x];
        count += ((d >> i) ^ (d >> r)) & 1;
      }
    }
    out.counts[cell] = count;
  }
  return out;
}

std::uint64_t fixed_points(const SBox& sbox) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < sbox.table.size(); ++i) count += sbox.table[i] == i;
  return count;
}

double correlation(const SBox& a, const SBox& b) {
  if (a.m() != b.m()) {
    throw Error(ErrorKind::SizeMismatch, "correlation needs tables of equal size");
  }
  const double n = static_cast<double>(a.m());
  double mean_a = 0, mean_b = 0;
  for (std::size_t i = 0; i < a.table.size(); ++i) {
    mean_a += static_cast<double>(a.table[i]);
    mean_b += static_cast<double>(b.table[i]);
  }
  mean_a /= n;
  mean_b /= n;
  double cov = 0, var_a = 0, var_b = 0;
  for (std::size_t i = 0; i < a.table.size(); ++i) {
    const double da = static_cast<double>(a.table[i]) - mean_a;
    const double db = static_cast<double>(b.table[i]) - mean_b;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (var_a == 0 || var_b == 0) return std::numeric_limits<double>::quiet_NaN();
  return cov / std::sqrt(var_a * var_b);
}

std::uint64_t distinct_count(std::span<const SBox> family) {
  std::vector<const std::vector<std::uint64_t>*> tables;
  tables.reserve(family.size());
  for (const auto& s : family) tables.push_back(&s.table);
  std::sort(tables.begin(), tables.end(), [](auto* a, auto* b) { return *a < *b; });
  const auto last = std::unique(tables.begin(), tables.end(), [](auto* a, auto* b) { return *a == *b; });
  return static_cast<std::uint64_t>(last - tables.begin());
}

CorrelationSummary pairwise_correlation(std::span<const SBox> family) {
  CorrelationSummary out;
  const auto count = static_cast<std::int64_t>(family.size());
  if (count < 2) return out;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  double sum = 0;
  std::uint64_t pairs = 0;
#pragma omp parallel for reduction(min : lo) reduction(max : hi) reduction(+ : sum, pairs) \
    schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) {
    for (std::int64_t j = i + 1; j < count; ++j) {
      const double c = correlation(family[i], family[j]);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
      sum += c;
      ++pairs;
    }
  }
  out.lower = lo;
  out.upper = hi;
  out.average = sum / static_cast<double>(pairs);
  out.pairs = pairs;
  return out;
}

Histogram histogram(std::span<const std::uint64_t> values) {
  Histogram h;
  for (std::uint64_t v : values) ++h.frequency[v];
  h.length = values.size();
  return h;
}

double entropy(const Histogram& h) {
  if (h.length == 0) throw Error(ErrorKind::EmptySequence, "entropy of an empty sequence");
  const double n = static_cast<double>(h.length);
  double bits = 0;
  for (const auto& [symbol, freq] : h.frequency) {
    const double q = static_cast<double>(freq) / n;
    bits -= q * std::log2(q);
  }
  return bits;
}

double entropy(std::span<const std::uint64_t> values) { return entropy(histogram(values)); }

std::uint64_t period(std::span<const std::uint64_t> values) {
  if (values.empty()) throw Error(ErrorKind::EmptySequence, "period of an empty sequence");
  // Shortest period = n - (longest proper border), via the prefix function.
  const std::size_t n = values.size();
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && values[i] != values[k]) k = border[k - 1];
    if (values[i] == values[k]) ++k;
    border[i] = k;
  }
  return n - border[n - 1];
}

SboxReport analyze_sbox(const SBox& sbox) {
  SboxReport r;
  r.m = sbox.m();
  r.fixed_points = fixed_points(sbox);
  {
    std::vector<bool> seen(sbox.m(), false);
    r.bijective = std::all_of(sbox.table.begin(), sbox.table.end(), [&](std::uint64_t v) {
      if (v >= seen.size() || seen[v]) return false;
      seen[v] = true;
      return true;
    });
  }
  try {
    sbox_bits(sbox.table);
    r.nl = nonlinearity(sbox);
    r.lap = lap(sbox);
    r.dap = dap(sbox);
    const BitMatrix sac = sac_matrix(sbox);
    r.sac_min = sac.min();
    r.sac_max = sac.max();
    if (sbox_bits(sbox.table) >= 2) {
      const BitMatrix bic = bic_matrix(sbox);
      r.bic_min = bic.min();
      r.bic_max = bic.max();
    } else {
      r.unsupported.push_back("bic: needs at least 2 output bits");
    }
  } catch (const Error& e) {
    r.unsupported.push_back(std::string("nl, lap, dap, sac, bic: ") + e.what());
  }
  try {
    r.ac = algebraic_complexity(sbox);
  } catch (const Error& e) {
    r.unsupported.push_back(std::string("ac: ") + e.what());
  }
  return r;
}

SequenceReport analyze_sequence(const SprnSequence& seq) {
  SequenceReport r;
  r.length = seq.values.size();
  r.m = seq.m;
  r.histogram = histogram(seq.values);
  r.entropy = entropy(r.histogram);
  r.log2_m = std::log2(static_cast<double>(seq.m));
  r.log2_observed = std::log2(static_cast<double>(r.histogram.frequency.size()));
  r.period = period(seq.values);
  return r;
}

}  // namespace mecforge
