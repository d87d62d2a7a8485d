#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <numeric>
#include <random>

#include "mecforge/error.hpp"
#include "mecforge/io.hpp"

using namespace mecforge;

namespace {

SBox sample(std::uint64_t m, std::uint64_t seed) {
  SBox s;
  s.table.resize(m);
  std::iota(s.table.begin(), s.table.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(s.table.begin(), s.table.end(), rng);
  s.provenance = {52511, 1, OrderingKind::Diffusion, 3, "natural", "direct"};
  return s;
}

}  // namespace

TEST_CASE("integer parsing") {
  using V = std::vector<std::uint64_t>;
  CHECK(io::parse_integers("1 2, 3;4\n5") == V{1, 2, 3, 4, 5});
  CHECK(io::parse_integers("A792 4A5C 421") == V{0xA792, 0x4A5C, 0x421});
  CHECK(io::parse_integers("10 11", io::NumberBase::Hex) == V{16, 17});
  CHECK(io::parse_integers("0x10 20") == V{16, 32});
  CHECK_THROWS_AS(io::parse_integers("12 zz"), Error);
}

TEST_CASE("complete set fixture parses to 256 distinct residues") {
  const auto values = io::parse_integers(io::read_file(std::string(MECFORGE_DATA_DIR) + "/complete_set_52511.txt"));
  REQUIRE(values.size() == 256);
  CHECK(values[0] == 0xA792);
  std::vector<bool> seen(256, false);
  for (auto v : values) seen[v % 256] = true;
  CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
}

TEST_CASE("S-box round trip in every format") {
  for (std::uint64_t m : {11ULL, 16ULL, 256ULL, 4096ULL}) {
    const SBox s = sample(m, m);
    for (auto f : {io::TableFormat::Hex, io::TableFormat::Csv, io::TableFormat::Json}) {
      const auto text = io::format_sbox(s, f);
      CHECK(io::parse_sbox(text).table == s.table);
    }
    const auto back = io::parse_sbox(io::format_sbox(s, io::TableFormat::Json));
    CHECK(back.provenance.p == 52511);
    CHECK(back.provenance.ordering == OrderingKind::Diffusion);
    CHECK(back.provenance.k == 3);
  }
}

TEST_CASE("hex layout") {
  const SBox s = sample(256, 1);
  const auto text = io::format_sbox(s, io::TableFormat::Hex);
  CHECK(std::count(text.begin(), text.end(), '\n') == 16);
  CHECK(text.find('\n') == 32);
  CHECK(io::hex_width(11) == 2);
  CHECK(io::hex_width(256) == 2);
  CHECK(io::hex_width(257) == 3);
  for (char c : text) CHECK((c == '\n' || std::isdigit(static_cast<unsigned char>(c)) || (c >= 'a' && c <= 'f')));
}

TEST_CASE("sequence round trip") {
  SprnSequence seq{{0, 5, 3, 5, 1}, 6, {}};
  for (auto f : {io::TableFormat::Csv, io::TableFormat::Json}) {
    const auto back = io::parse_sequence(io::format_sequence(seq, f), 6);
    CHECK(back.values == seq.values);
    CHECK(back.m == 6);
  }
  CHECK(io::parse_sequence("1,2,3").m == 4);
  CHECK_THROWS_AS(io::parse_sequence("1,2,9", 5), Error);
  CHECK_THROWS_AS(io::parse_sequence(""), Error);
}

TEST_CASE("reports") {
  SboxReport r;
  r.m = 16;
  r.nl = 4;
  r.lap = Rational{4, 16};
  r.unsupported = {"ac: only for 8-bit"};
  const auto j = io::to_json(r);
  CHECK(j.at("nl") == 4);
  CHECK(j.at("ac") == "n/a");
  CHECK(j.at("lap").at("num") == 4);
  CHECK(j.at("lap").at("den") == 16);
  CHECK(j.at("lap").at("value") == 0.25);
  CHECK(io::round4(0.015625) == 0.0156);
  CHECK(io::to_csv(r).find("ac,n/a") != std::string::npos);
}

TEST_CASE("file errors") {
  CHECK_THROWS_AS(io::read_file("/nonexistent/dir/file"), Error);
  try {
    io::write_file("/nonexistent/dir/file", "x");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Io);
  }
  const auto path = std::filesystem::temp_directory_path() / "mecforge_io_test.txt";
  io::write_file(path.string(), "hello");
  CHECK(io::read_file(path.string()) == "hello");
  std::filesystem::remove(path);
}
