#include "mecforge/reference.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>

#include "mecforge/error.hpp"
#include "mecforge/gf256.hpp"

namespace mecforge::reference {

namespace {

// The three orders exactly as defined, without the shared key function.
bool precedes(OrderingKind kind, const CurvePoint& a, const CurvePoint& b, std::uint64_t p) {
  switch (kind) {
    case OrderingKind::Natural:
      return a.x < b.x || (a.x == b.x && a.y < b.y);
    case OrderingKind::Diffusion:
      return a.x + a.y < b.x + b.y || (a.x + a.y == b.x + b.y && a.x < b.x);
    case OrderingKind::ModuloDiffusion: {
      const std::uint64_t sa = (a.x + a.y) % p, sb = (b.x + b.y) % p;
      return sa < sb || (sa == sb && a.x < b.x);
    }
  }
  return false;
}

}  // namespace

SBox sbox_trial_search(const MordellCurve& curve, OrderingKind kind, const CompleteSet& set,
                       std::uint64_t k) {
  const std::uint64_t p = curve.p();
  const std::uint64_t m = set.m();
  if (k >= m) throw Error(ErrorKind::BadShift, "k must be below m");

  std::vector<CurvePoint> found;
  for (std::uint64_t y : set.elements()) {
    const std::uint64_t y2 = mul_mod(y, y, p);
    for (std::uint64_t x = 0; x < p; ++x) {
      const std::uint64_t lhs = add_mod(mul_mod(mul_mod(x, x, p), x, p), curve.b(), p);
      if (lhs == y2) {
        found.push_back({x, y});
        break;
      }
    }
  }
  // Insertion sort keeps the reference free of library ordering machinery.
  for (std::size_t i = 1; i < found.size(); ++i) {
    for (std::size_t j = i; j > 0 && precedes(kind, found[j], found[j - 1], p); --j) {
      std::swap(found[j], found[j - 1]);
    }
  }
  SBox out;
  out.table.resize(m);
  for (std::uint64_t i = 0; i < m; ++i) out.table[i] = found[(i + k) % m].y % m;
  out.provenance = {p, curve.b(), kind, k, {}, "trial-search"};
  return out;
}

std::uint64_t pstar_exhaustive(const PrimeModulus& p, OrderingKind kind) {
  for (std::uint64_t m = p.value() - 1; m >= 1; --m) {
    const CompleteSet natural = CompleteSet::natural(m, p);
    std::set<std::vector<std::uint64_t>> seen;
    for (std::uint64_t b = 1; b < p.value(); ++b) {
      if (!seen.insert(sbox_direct(MordellCurve(p, b), kind, natural, 0).table).second) return m;
    }
  }
  return 0;
}

std::uint64_t max_walsh_magnitude(const std::vector<std::uint64_t>& table, unsigned n) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::uint64_t best = 0;
  for (std::uint64_t beta = 1; beta < size; ++beta) {
    for (std::uint64_t alpha = 0; alpha < size; ++alpha) {
      std::int64_t w = 0;
      for (std::uint64_t x = 0; x < size; ++x) {
        w += (std::popcount((alpha & x) ^ (beta & table[x])) & 1) ? -1 : 1;
      }
      best = std::max<std::uint64_t>(best, static_cast<std::uint64_t>(std::llabs(w)));
    }
  }
  return best;
}

std::uint64_t max_differential(const std::vector<std::uint64_t>& table, unsigned n) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::uint64_t best = 0;
  for (std::uint64_t dx = 1; dx < size; ++dx) {
    for (std::uint64_t dy = 0; dy < size; ++dy) {
      std::uint64_t count = 0;
      for (std::uint64_t x = 0; x < size; ++x) count += table[x ^ dx] == (table[x] ^ dy);
      best = std::max(best, count);
    }
  }
  return best;
}

std::vector<std::uint64_t> sac_counts(const std::vector<std::uint64_t>& table, unsigned n) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint64_t> counts(n * n, 0);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      for (std::uint64_t x = 0; x < size; ++x) {
        const unsigned before = (table[x] >> i) & 1;
        const unsigned after = (table[x ^ (std::uint64_t{1} << j)] >> i) & 1;
        counts[i * n + j] += before != after;
      }
    }
  }
  return counts;
}

std::vector<std::uint64_t> bic_counts(const std::vector<std::uint64_t>& table, unsigned n) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::uint64_t> counts(n * n, 0);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned r = 0; r < n; ++r) {
      if (i == r) continue;
      for (unsigned j = 0; j < n; ++j) {
        for (std::uint64_t x = 0; x < size; ++x) {
          const std::uint64_t flipped = x ^ (std::uint64_t{1} << j);
          const unsigned fi = ((table[x] >> i) ^ (table[x] >> r)) & 1;
          const unsigned gi = ((table[flipped] >> i) ^ (table[flipped] >> r)) & 1;
          counts[i * n + r] += fi != gi;
        }
      }
    }
  }
  return counts;
}

std::vector<std::uint8_t> gf256_coefficients(const std::vector<std::uint64_t>& table) {
  // Solve the 256 x 256 Vandermonde system V c = S by Gauss-Jordan elimination.
  constexpr int N = 256;
  std::vector<std::vector<Gf256>> rows(N, std::vector<Gf256>(N + 1));
  for (int a = 0; a < N; ++a) {
    Gf256 power(1);
    for (int k = 0; k < N; ++k) {
      rows[a][k] = (a == 0 && k > 0) ? Gf256(0) : power;
      power *= Gf256(static_cast<std::uint8_t>(a));
    }
    rows[a][N] = Gf256(static_cast<std::uint8_t>(table[a]));
  }
  // X^255 and X^0 agree on every nonzero point; the 256 columns are independent
  // because column 0 alone is nonzero at a = 0.
  for (int col = 0; col < N; ++col) {
    int pivot = col;
    while (pivot < N && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == N) throw Error(ErrorKind::UnsupportedSize, "singular interpolation system");
    std::swap(rows[col], rows[pivot]);
    const Gf256 inv = rows[col][col].inverse();
    for (int k = col; k <= N; ++k) rows[col][k] *= inv;
    for (int r = 0; r < N; ++r) {
      if (r == col || rows[r][col].is_zero()) continue;
      const Gf256 factor = rows[r][col];
      for (int k = col; k <= N; ++k) rows[r][k] += factor * rows[col][k];
    }
  }
  std::vector<std::uint8_t> coeffs(N);
  for (int k = 0; k < N; ++k) coeffs[k] = rows[k][N].bits();
  return coeffs;
}

}  // namespace mecforge::reference
