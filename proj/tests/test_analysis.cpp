#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "mecforge/analysis.hpp"
#include "mecforge/error.hpp"
#include "mecforge/gf256.hpp"
#include "mecforge/io.hpp"
#include "mecforge/reference.hpp"

using namespace mecforge;

namespace {

using Table = std::vector<std::uint64_t>;

SBox make(Table t) { return SBox{std::move(t), {}}; }

SBox identity(std::uint64_t m) {
  Table t(m);
  std::iota(t.begin(), t.end(), 0);
  return make(std::move(t));
}

SBox random_bijection(std::uint64_t m, std::mt19937_64& rng) {
  SBox s = identity(m);
  std::shuffle(s.table.begin(), s.table.end(), rng);
  return s;
}

SBox fixture(const char* name) {
  return io::parse_sbox(io::read_file(std::string(MECFORGE_DATA_DIR) + "/" + name));
}

// Minimum distance from any nonzero component function to the affine functions.
std::uint64_t nl_by_distance(const Table& t, unsigned n) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::uint64_t best = size;
  for (std::uint64_t beta = 1; beta < size; ++beta) {
    for (std::uint64_t alpha = 0; alpha < size; ++alpha) {
      for (std::uint64_t c = 0; c < 2; ++c) {
        std::uint64_t dist = 0;
        for (std::uint64_t x = 0; x < size; ++x) {
          const int f = std::popcount(beta & t[x]) & 1;
          const int a = (std::popcount(alpha & x) & 1) ^ static_cast<int>(c);
          dist += f != a;
        }
        best = std::min(best, dist);
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("GF(2^8) arithmetic") {
  const Gf256 a(0x57), b(0x83);
  CHECK((a * b).bits() == 0xC1);  // worked example for the AES field
  CHECK((a + b).bits() == (0x57 ^ 0x83));
  for (unsigned v = 1; v < 256; ++v) {
    const Gf256 x(static_cast<std::uint8_t>(v));
    CHECK((x * x.inverse()).bits() == 1);
  }
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    const Gf256 x(rng() & 0xFF), y(rng() & 0xFF), z(rng() & 0xFF);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("AES fixture metrics") {
  const SBox aes = fixture("aes_sbox.hex");
  REQUIRE(aes.m() == 256);
  CHECK(aes.table[0] == 0x63);
  CHECK(nonlinearity(aes) == 112);
  CHECK(lap(aes) == Rational{16, 256});
  CHECK(dap(aes) == Rational{4, 256});
  CHECK(algebraic_complexity(aes) == 9);
  CHECK(fixed_points(aes) == 0);
  const auto sac = sac_matrix(aes);
  CHECK(sac.max() == Rational{144, 256});
  CHECK(sac.min() == Rational{116, 256});
}

TEST_CASE("identity and affine S-boxes") {
  const SBox id = identity(256);
  CHECK(nonlinearity(id) == 0);
  CHECK(lap(id) == Rational{128, 256});
  CHECK(dap(id) == Rational{256, 256});
  CHECK(algebraic_complexity(id) == 1);
  CHECK(fixed_points(id) == 256);
  const auto sac = sac_matrix(id);
  for (unsigned i = 0; i < 8; ++i)
    for (unsigned j = 0; j < 8; ++j) CHECK(sac.at(i, j) == (i == j ? 1.0 : 0.0));

  Table affine(256);
  for (std::uint64_t x = 0; x < 256; ++x) affine[x] = x ^ 0x5A;
  CHECK(dap(make(affine)) == Rational{256, 256});

  Table rot(16);
  for (std::uint64_t i = 0; i < 16; ++i) rot[i] = (i + 1) % 16;
  CHECK(fixed_points(make(rot)) == 0);
}

TEST_CASE("metric errors") {
  CHECK_THROWS_AS(nonlinearity(identity(12)), Error);
  CHECK_THROWS_AS(dap(identity(12)), Error);
  CHECK_THROWS_AS(algebraic_complexity(identity(16)), Error);
  CHECK_THROWS_AS(correlation(identity(4), identity(8)), Error);
  CHECK_THROWS_AS(entropy(Table{}), Error);
  CHECK_THROWS_AS(period(Table{}), Error);
  const auto report = analyze_sbox(identity(16));
  CHECK(report.nl.has_value());
  CHECK_FALSE(report.ac.has_value());
  CHECK(report.unsupported.size() == 1);
  const auto odd = analyze_sbox(identity(11));
  CHECK_FALSE(odd.nl.has_value());
  CHECK(odd.fixed_points == 11);
}

TEST_CASE("parallel kernels agree with serial references") {
  std::mt19937_64 rng(9);
  for (unsigned n : {2u, 3u, 4u, 5u, 6u, 8u}) {
    const std::uint64_t size = std::uint64_t{1} << n;
    for (int trial = 0; trial < (n == 8 ? 3 : 10); ++trial) {
      const SBox s = random_bijection(size, rng);
      const auto walsh = reference::max_walsh_magnitude(s.table, n);
      CHECK(nonlinearity(s) == size / 2 - walsh / 2);
      CHECK(lap(s) == Rational{walsh / 2, size});
      if (n <= 6) CHECK(nonlinearity(s) == nl_by_distance(s.table, n));
      const auto diff = reference::max_differential(s.table, n);
      CHECK(dap(s) == Rational{diff, size});
      CHECK(diff >= 2);
      CHECK(diff % 2 == 0);
      const auto sac = sac_matrix(s);
      CHECK(sac.counts == reference::sac_counts(s.table, n));
      CHECK(sac.denominator == size);
      const auto bic = bic_matrix(s);
      CHECK(bic.counts == reference::bic_counts(s.table, n));
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
          CHECK(sac.at(i, j) >= 0.0);
          CHECK(sac.at(i, j) <= 1.0);
          if (i != j || bic.diagonal_defined) {
            CHECK(bic.at(i, j) >= 0.0);
            CHECK(bic.at(i, j) <= 1.0);
          }
        }
    }
  }
}

TEST_CASE("GF(2^8) interpolation round trip and serial oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 3; ++trial) {
    const SBox s = random_bijection(256, rng);
    const auto coeffs = gf256_interpolate(s);
    CHECK(coeffs == reference::gf256_coefficients(s.table));
    for (unsigned x = 0; x < 256; ++x) {
      Gf256 acc(0), power(1);
      for (unsigned k = 0; k < 256; ++k) {
        acc += Gf256(coeffs[k]) * power;
        power *= Gf256(static_cast<std::uint8_t>(x));
      }
      CHECK(acc.bits() == s.table[x]);
    }
  }
}

TEST_CASE("correlation") {
  std::mt19937_64 rng(4);
  const SBox s = random_bijection(64, rng);
  CHECK(correlation(s, s) == doctest::Approx(1.0));
  Table rc(64);
  for (std::size_t i = 0; i < 64; ++i) rc[i] = 63 - s.table[i];
  CHECK(correlation(s, make(rc)) == doctest::Approx(-1.0));
  CHECK(std::isnan(correlation(make(Table(8, 3)), identity(8))));
  const std::vector<SBox> fam = {s, make(rc), identity(64)};
  const auto summary = pairwise_correlation(fam);
  CHECK(summary.pairs == 3);
  CHECK(summary.lower == doctest::Approx(-1.0));
}

TEST_CASE("distinct count") {
  std::vector<SBox> same(5, identity(8));
  CHECK(distinct_count(same) == 1);
  std::mt19937_64 rng(8);
  std::vector<SBox> fam;
  for (int i = 0; i < 30; ++i) fam.push_back(random_bijection(4, rng));
  std::set<Table> oracle;
  for (const auto& s : fam) oracle.insert(s.table);
  CHECK(distinct_count(fam) == oracle.size());
}

TEST_CASE("histogram, entropy and period") {
  CHECK(entropy(Table(10, 4)) == 0.0);
  CHECK(period(Table(10, 4)) == 1);
  CHECK(period(Table{1, 2, 3, 1, 2, 3, 1}) == 3);
  CHECK(period(Table{1, 2, 1, 1}) == 3);
  CHECK(period(Table{0, 1, 2, 3, 4}) == 5);
  const auto h = histogram(Table{1, 1, 2, 5});
  CHECK(h.length == 4);
  CHECK(h.frequency.at(1) == 2);
  CHECK(entropy(h) == doctest::Approx(1.5));

  // A = [0, m - 1] reduced mod h: q + 1 copies of [0, r - 1], q of the rest.
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t m = 1 + rng() % 500;
    const std::uint64_t mod = 1 + rng() % m;
    Table seq(m);
    for (std::uint64_t i = 0; i < m; ++i) seq[i] = i % mod;
    const auto hist = histogram(seq);
    const std::uint64_t q = m / mod, r = m % mod;
    for (std::uint64_t w = 0; w < mod; ++w) CHECK(hist.frequency.at(w) == (w < r ? q + 1 : q));
    const double dm = static_cast<double>(m);
    double closed = 0;
    if (r > 0) closed -= static_cast<double>(r * (q + 1)) / dm * std::log2(static_cast<double>(q + 1) / dm);
    closed -= static_cast<double>((mod - r) * q) / dm * std::log2(static_cast<double>(q) / dm);
    CHECK(std::abs(entropy(hist) - closed) < 1e-10);
    CHECK(entropy(hist) <= std::log2(static_cast<double>(hist.frequency.size())) + 1e-12);
  }
}
