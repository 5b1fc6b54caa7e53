#include <set>

#include "doctest.h"
#include "delpezzo/cubic.hpp"
#include "delpezzo/surface_io.hpp"

using namespace delpezzo;
using namespace delpezzo::ffield;
using namespace delpezzo::projgeom;
using namespace delpezzo::cubic;

namespace {

CubicSurface fixture(const std::string& name) {
  return io::make_cubic(io::parse_surface_json(io::fixture_json(name)));
}

}  // namespace

TEST_CASE("the one-point surface over F_2") {
  auto S = fixture("cubic-f2-one-point");
  const auto& pts = S.points(1);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == make_point(*S.analysis(1).B, {1, 0, 0, 0}));
  CHECK(S.point_count(3) == 121);  // over F_8
}

TEST_CASE("the three-point surface over F_2") {
  auto S = fixture("cubic-f2-three-points");
  const auto& pts = S.points(1);
  REQUIRE(pts.size() == 3);
  const auto& B = *S.analysis(1).B;
  std::set<ProjPoint> expect{make_point(B, {1, 0, 0, 0}), make_point(B, {0, 1, 0, 0}),
                             make_point(B, {1, 1, 0, 0})};
  CHECK(std::set<ProjPoint>(pts.begin(), pts.end()) == expect);
}

TEST_CASE("the nine-point surfaces over F_4") {
  for (const char* name : {"cubic-f4-theta-a", "cubic-f4-theta-b"}) {
    auto S = fixture(name);
    CHECK(S.point_count(1) == 9);
  }
}

TEST_CASE("point enumeration matches a brute P^3 scan") {
  for (const char* name : {"cubic-f2-one-point", "cubic-f2-three-points", "cubic-f4-theta-a"}) {
    auto S = fixture(name);
    for (int k = 1; k <= (S.q() == 2 ? 3 : 2); ++k) {
      const auto& A = S.analysis(k);
      std::set<ProjPoint> brute;
      for (const auto& pt : enum_points(3, *A.B))
        if (eval_form(A, pt) == 0) brute.insert(pt);
      const auto& got = S.points(k);
      std::set<ProjPoint> got_set(got.begin(), got.end());
      REQUIRE(got.size() == got_set.size());
      REQUIRE(got_set == brute);
    }
  }
}

TEST_CASE("Chevalley-Warning: point counts are 1 mod p") {
  for (const char* name :
       {"cubic-f2-one-point", "cubic-f2-three-points", "cubic-f4-theta-a", "cubic-f4-theta-b"}) {
    auto S = fixture(name);
    for (int k = 1; k <= 3; ++k) {
      if (S.q() == 4 && k > 2) break;
      CHECK(S.point_count(k) % S.p() == 1);
    }
  }
}

TEST_CASE("smoothness scans") {
  auto S1 = fixture("cubic-f2-one-point");
  for (int k = 1; k <= 6; ++k) CHECK(S1.singular_points(k).empty());
  CHECK(S1.smoothness().smooth);

  auto S3 = fixture("cubic-f4-theta-a");
  for (int k = 1; k <= 3; ++k) CHECK(S3.singular_points(k).empty());

  // The cone x0^3 + x1^3 + x2^3 over F_7 is singular at [0,0,0,1].
  std::vector<SurfaceTerm> cone{{{3, 0, 0, 0, 0}, {1}}, {{0, 3, 0, 0, 0}, {1}}, {{0, 0, 3, 0, 0}, {1}}};
  CubicSurface C(7, 1, {0, 1}, cone);
  auto sing = C.singular_points(1);
  REQUIRE(sing.size() == 1);
  CHECK(sing[0] == make_point(*C.analysis(1).B, {0, 0, 0, 1}));
  CHECK_FALSE(C.smoothness().smooth);
}

TEST_CASE("tangent planes") {
  // At [1,0,0,0] on the three-point surface the tangent plane is Y = 0.
  auto S = fixture("cubic-f2-three-points");
  const auto& A = S.analysis(1);
  const auto pi = tangent_plane(A, make_point(*A.B, {1, 0, 0, 0}));
  CHECK(pi.dual == std::array<Code, 4>{0, 1, 0, 0});

  // Fermat cubic over F_5 at [1,-1,0,0]: plane x0 + x1 = 0.
  std::vector<SurfaceTerm> fermat{{{3, 0, 0, 0, 0}, {1}},
                                  {{0, 3, 0, 0, 0}, {1}},
                                  {{0, 0, 3, 0, 0}, {1}},
                                  {{0, 0, 0, 3, 0}, {1}}};
  CubicSurface F5(5, 1, {0, 1}, fermat);
  const auto& A5 = F5.analysis(1);
  const auto pi5 = tangent_plane(A5, make_point(*A5.B, {1, -1, 0, 0}));
  CHECK(pi5.dual == std::array<Code, 4>{1, 1, 0, 0});

  CHECK_THROWS_AS(tangent_plane(A5, make_point(*A5.B, {1, 0, 0, 0})), input_error);
}

TEST_CASE("tangent cubic is singular at the point of tangency") {
  auto S = fixture("cubic-f2-one-point");
  const auto& A = S.analysis(3);
  int checked = 0;
  for (const auto& pt : S.points(3)) {
    if (checked >= 12) break;
    const auto tc = tangent_cubic(A, pt);
    CHECK(form_eval(*A.B, tc.section, tc.point_in_plane) == 0);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("surface file parsing rejects malformed input") {
  CHECK_THROWS_AS(io::parse_surface_json("{"), input_error);
  CHECK_THROWS_AS(io::parse_surface_json(R"({"kind": "quartic", "p": 2, "coeffs": []})"), input_error);
  CHECK_THROWS_AS(io::parse_surface_json(
                      R"({"kind": "cubic", "p": 2, "coeffs": [{"exps": [1,1,1,1], "value": [1]}]})"),
                  input_error);
  CHECK_THROWS_AS(io::parse_surface_json(
                      R"({"kind": "cubic", "p": 2, "coeffs": [{"exps": [3,0,0], "value": [1]}]})"),
                  input_error);
  // Round trip.
  auto sf = io::parse_surface_json(io::fixture_json("cubic-f4-theta-a"));
  auto sf2 = io::parse_surface_json(io::surface_to_json(sf));
  CHECK(sf2.kind == sf.kind);
  CHECK(sf2.p == sf.p);
  CHECK(sf2.r == sf.r);
  CHECK(sf2.gen_poly == sf.gen_poly);
  REQUIRE(sf2.blocks.size() == 1);
  CHECK(sf2.blocks[0].size() == sf.blocks[0].size());
}
