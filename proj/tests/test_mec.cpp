#include <doctest.h>

#include <algorithm>
#include <set>

#include "mecforge/error.hpp"
#include "mecforge/mec.hpp"

using namespace mecforge;

namespace {

std::vector<CurvePoint> brute_points(std::uint64_t p, std::uint64_t b) {
  std::vector<CurvePoint> pts;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y)
      if ((y * y) % p == (x * x % p * x + b) % p) pts.push_back({x, y});
  return pts;
}

}  // namespace

TEST_CASE("points of E_{11,1}") {
  const MordellCurve c(11, 1);
  std::vector<CurvePoint> expected = {{0, 1}, {0, 10}, {2, 3}, {2, 8}, {5, 4}, {5, 7},
                                      {7, 5}, {7, 6},  {9, 2}, {9, 9}, {10, 0}};
  auto pts = enumerate_points(c);
  std::sort(pts.begin(), pts.end());
  CHECK(pts == expected);
}

TEST_CASE("curve construction errors") {
  CHECK_THROWS_AS(MordellCurve(13, 1), Error);
  CHECK_THROWS_AS(MordellCurve(12, 1), Error);
  CHECK_THROWS_AS(MordellCurve(11, 0), Error);
  CHECK_THROWS_AS(MordellCurve(11, 11), Error);
  try {
    MordellCurve bad(13, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAdmissible);
    CHECK(std::string(e.what()).find("p must be prime with p ≡ 2 (mod 3)") != std::string::npos);
  }
  CHECK_THROWS_AS(enumerate_points(MordellCurve(52511, 1), 1000), Error);
}

TEST_CASE("every y has exactly one x, matching brute force") {
  for (std::uint64_t p : {5ULL, 11ULL, 17ULL, 23ULL, 29ULL, 41ULL, 47ULL}) {
    for (std::uint64_t b = 1; b < p; ++b) {
      const MordellCurve c(p, b);
      auto pts = enumerate_points(c);
      CHECK(pts.size() == p);  // affine points; p + 1 with the point at infinity
      auto brute = brute_points(p, b);
      std::sort(pts.begin(), pts.end());
      CHECK(pts == brute);
      for (std::uint64_t y = 0; y < p; ++y) {
        CHECK(c.contains(point_for_y(c, y)));
      }
    }
  }
}

TEST_CASE("classes and representatives") {
  const PrimeModulus p(11);
  CHECK(representative(p, CurveClass::C1) == 1);
  CHECK(representative(p, CurveClass::C2) == 2);
  CHECK(classify(MordellCurve(11, 9)) == CurveClass::C1);
  CHECK(classify(MordellCurve(11, 2)) == CurveClass::C2);
  for (std::uint64_t pv : {11ULL, 17ULL, 23ULL, 101ULL}) {
    const PrimeModulus m(pv);
    std::set<std::uint64_t> c1, c2;
    for (std::uint64_t t = 1; t <= (pv - 1) / 2; ++t) {
      const FieldElement te(t, m);
      c1.insert(iso_image_parameter(representative(m, CurveClass::C1), te));
      c2.insert(iso_image_parameter(representative(m, CurveClass::C2), te));
    }
    CHECK(c1.size() == (pv - 1) / 2);
    CHECK(c2.size() == (pv - 1) / 2);
    for (auto b : c1) CHECK(c2.count(b) == 0);
    for (auto b : c1) CHECK(classify(MordellCurve(pv, b)) == CurveClass::C1);
    for (auto b : c2) CHECK(classify(MordellCurve(pv, b)) == CurveClass::C2);
  }
}

TEST_CASE("isomorphism parameters") {
  const PrimeModulus p(11);
  CHECK(iso_param_between(1, 9, p) == std::optional<std::uint64_t>(2));
  CHECK_FALSE(iso_param_between(1, 2, p).has_value());
  CHECK(iso_image_parameter(1, FieldElement(2, p)) == 9);
  CHECK_THROWS_AS(iso_map_point({0, 1}, FieldElement(0, p)), Error);

  for (std::uint64_t pv : {11ULL, 17ULL, 29ULL}) {
    const PrimeModulus m(pv);
    for (std::uint64_t b1 = 1; b1 < pv; ++b1) {
      for (std::uint64_t b2 = 1; b2 < pv; ++b2) {
        const auto t = iso_param_between(b1, b2, m);
        CHECK(t.has_value() == (classify(MordellCurve(pv, b1)) == classify(MordellCurve(pv, b2))));
        if (!t) continue;
        CHECK(*t >= 1);
        CHECK(*t <= (pv - 1) / 2);
        const FieldElement te(*t, m);
        CHECK(iso_image_parameter(b1, te) == b2);
        const MordellCurve src(m, b1), dst(m, b2);
        for (const auto& pt : enumerate_points(src)) CHECK(dst.contains(iso_map_point(pt, te)));
      }
    }
  }
}
