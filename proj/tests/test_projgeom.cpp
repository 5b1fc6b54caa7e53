#include <random>
#include <set>

#include "doctest.h"
#include "delpezzo/projgeom.hpp"

using namespace delpezzo;
using namespace delpezzo::ffield;
using namespace delpezzo::projgeom;

namespace {

HomForm form_from(const FieldCtx& F, int nvars, int degree,
                  std::initializer_list<std::pair<std::array<std::uint8_t, 5>, int>> terms) {
  HomForm f = zero_form(nvars, degree);
  const auto& tbl = monomials(nvars, degree);
  for (auto& [e, c] : terms) {
    int cc = c % F.p();
    if (cc < 0) cc += F.p();
    f.coeffs[std::size_t(tbl.index(e))] = F.add(f.coeffs[std::size_t(tbl.index(e))], F.from_coeffs({cc}));
  }
  return f;
}

}  // namespace

TEST_CASE("monomial order is frozen descending lex") {
  const auto& t43 = monomials(4, 3);
  REQUIRE(t43.exps.size() == 20);
  CHECK(t43.exps.front() == std::array<std::uint8_t, 5>{3, 0, 0, 0, 0});
  CHECK(t43.exps[1] == std::array<std::uint8_t, 5>{2, 1, 0, 0, 0});
  CHECK(t43.exps.back() == std::array<std::uint8_t, 5>{0, 0, 0, 3, 0});
  CHECK(monomials(5, 2).exps.size() == 15);
  CHECK(monomials(3, 3).exps.size() == 10);
}

TEST_CASE("point counts match the geometric series") {
  for (auto [p, n] : {std::pair{2, 1}, {2, 2}, {3, 1}, {5, 1}}) {
    auto F = FieldCtx::make(p, n);
    for (int dim = 1; dim <= 3; ++dim) {
      auto pts = enum_points(dim, *F);
      CHECK(std::int64_t(pts.size()) == proj_space_size(dim, F->q()));
      std::set<ProjPoint> uniq(pts.begin(), pts.end());
      CHECK(uniq.size() == pts.size());
    }
  }
  auto F2 = FieldCtx::make(2, 1);
  CHECK(enum_points(3, *F2).size() == 15);
  auto F4 = FieldCtx::make(2, 2);
  CHECK(enum_points(2, *F4).size() == 21);
  CHECK(enum_points(1, *F4).size() == 5);  // q + 1
}

TEST_CASE("line through coordinate points") {
  auto F = FieldCtx::make(2, 1);
  const auto a = make_point(*F, {1, 0, 0, 0});
  const auto b = make_point(*F, {0, 1, 0, 0});
  const auto L = line_through(*F, a, b);
  auto pts = points_on_line(*F, L);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == make_point(*F, {1, 0, 0, 0}));
  CHECK(pts[1] == make_point(*F, {1, 1, 0, 0}));
  CHECK(pts[2] == make_point(*F, {0, 1, 0, 0}));
  CHECK_THROWS_AS(line_through(*F, a, a), input_error);
}

TEST_CASE("line_through is symmetric and canonical on random pairs") {
  auto F = FieldCtx::make(5, 1);
  auto pts = enum_points(3, *F);
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    const auto& a = pts[rng() % pts.size()];
    const auto& b = pts[rng() % pts.size()];
    if (a == b) continue;
    const auto L1 = line_through(*F, a, b);
    const auto L2 = line_through(*F, b, a);
    CHECK(L1 == L2);
    auto on = points_on_line(*F, L1);
    CHECK(on.size() == std::size_t(F->q()) + 1);
    for (const auto& p : on) CHECK(point_on_line(*F, p, L1));
  }
}

TEST_CASE("incidence of coordinate lines") {
  auto F = FieldCtx::make(2, 1);
  const auto L1 = line_through(*F, make_point(*F, {1, 0, 0, 0}), make_point(*F, {0, 1, 0, 0}));
  const auto L2 = line_through(*F, make_point(*F, {0, 0, 1, 0}), make_point(*F, {0, 0, 0, 1}));
  const auto L3 = line_through(*F, make_point(*F, {1, 0, 0, 0}), make_point(*F, {0, 0, 1, 0}));
  CHECK(incidence(*F, L1, L2) == 0);  // skew
  CHECK(incidence(*F, L1, L3) == 1);  // meet at [1,0,0,0]
  auto x = line_intersection(*F, L1, L3);
  REQUIRE(x.has_value());
  CHECK(*x == make_point(*F, {1, 0, 0, 0}));
  CHECK_THROWS_AS(incidence(*F, L1, L1), input_error);
}

TEST_CASE("restriction examples") {
  auto F2 = FieldCtx::make(2, 1);
  // Fermat cubic restricted to {x2 = x3 = 0} is s^3 + t^3.
  const auto fermat = form_from(*F2, 4, 3,
                                {{{3, 0, 0, 0, 0}, 1}, {{0, 3, 0, 0, 0}, 1}, {{0, 0, 3, 0, 0}, 1}, {{0, 0, 0, 3, 0}, 1}});
  const auto L = line_through(*F2, make_point(*F2, {1, 0, 0, 0}), make_point(*F2, {0, 1, 0, 0}));
  const auto b = restrict_to_line(*F2, fermat, L);
  const auto expect = form_from(*F2, 2, 3, {{{3, 0, 0, 0, 0}, 1}, {{0, 3, 0, 0, 0}, 1}});
  CHECK(b == expect);

  // XY(X+Y) + Z^3 + Z^2 W + W^3 restricted to {Z = W = 0} is s^2 t + s t^2.
  const auto eq2 = form_from(*F2, 4, 3,
                             {{{2, 1, 0, 0, 0}, 1}, {{1, 2, 0, 0, 0}, 1}, {{0, 0, 3, 0, 0}, 1},
                              {{0, 0, 2, 1, 0}, 1}, {{0, 0, 0, 3, 0}, 1}});
  const auto b2 = restrict_to_line(*F2, eq2, L);
  const auto expect2 = form_from(*F2, 2, 3, {{{2, 1, 0, 0, 0}, 1}, {{1, 2, 0, 0, 0}, 1}});
  CHECK(b2 == expect2);

  // The zero form restricts to the zero form.
  CHECK(restrict_to_line(*F2, zero_form(4, 3), L).is_zero());
}

TEST_CASE("restriction commutes with evaluation, exhaustively over small fields") {
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    auto F = FieldCtx::make(p, n);
    std::mt19937 rng(p * 10 + n);
    auto pts = enum_points(3, *F);
    for (int trial = 0; trial < 10; ++trial) {
      HomForm f = zero_form(4, 3);
      for (auto& c : f.coeffs) c = Code(rng() % unsigned(F->q()));
      const auto& a = pts[rng() % pts.size()];
      const auto& b = pts[rng() % pts.size()];
      if (a == b) continue;
      const auto L = line_through(*F, a, b);
      const auto r = restrict_to_line(*F, f, L);
      for (int s = 0; s <= F->q(); ++s) {
        const Code st[2] = {s == F->q() ? Code(0) : Code(1), s == F->q() ? Code(1) : Code(s)};
        Code xy[4];
        for (int i = 0; i < 4; ++i)
          xy[i] = F->add(F->mul(st[0], L.m[std::size_t(i)]), F->mul(st[1], L.m[std::size_t(4 + i)]));
        CHECK(form_eval(*F, r, st) == form_eval(*F, f, xy));
      }
    }
  }
}

TEST_CASE("partials in characteristic 2 and the Euler relation") {
  auto F2 = FieldCtx::make(2, 1);
  // d/dZ of Z^3 = 3Z^2 = Z^2 over F_2.
  const auto z3 = form_from(*F2, 4, 3, {{{0, 0, 3, 0, 0}, 1}});
  const auto dz = partials(*F2, z3)[2];
  CHECK(dz == form_from(*F2, 4, 2, {{{0, 0, 2, 0, 0}, 1}}));
  // d/dX of X^2 Y = 2XY = 0 over F_2.
  const auto x2y = form_from(*F2, 4, 3, {{{2, 1, 0, 0, 0}, 1}});
  CHECK(partials(*F2, x2y)[0].is_zero());

  // Euler relation sum x_i df/dx_i = deg * f over F_5 (5 does not divide 3).
  auto F5 = FieldCtx::make(5, 1);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    HomForm f = zero_form(4, 3);
    for (auto& c : f.coeffs) c = Code(rng() % 5);
    auto ps = partials(*F5, f);
    Code x[4];
    for (auto& xi : x) xi = Code(rng() % 5);
    Code lhs = 0;
    for (int i = 0; i < 4; ++i) lhs = F5->add(lhs, F5->mul(x[i], form_eval(*F5, ps[std::size_t(i)], x)));
    const Code rhs = F5->mul(F5->from_coeffs({3}), form_eval(*F5, f, x));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("plane operations") {
  auto F = FieldCtx::make(3, 1);
  const auto pi = plane_span(*F, make_point(*F, {1, 0, 0, 0}), make_point(*F, {0, 1, 0, 0}),
                             make_point(*F, {0, 0, 1, 0}));
  CHECK(pi.dual == std::array<Code, 4>{0, 0, 0, 1});
  CHECK(point_on_plane(*F, make_point(*F, {1, 2, 1, 0}), pi));
  CHECK_FALSE(point_on_plane(*F, make_point(*F, {0, 0, 0, 1}), pi));
  auto basis = plane_basis(*F, pi);
  REQUIRE(basis.size() == 3);
  for (const auto& b : basis) CHECK(point_on_plane(*F, b, pi));

  const auto L = line_through(*F, make_point(*F, {1, 0, 0, 0}), make_point(*F, {0, 1, 0, 0}));
  auto [d1, d2] = plane_pencil(*F, L);
  // Every pencil combination contains L.
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      std::array<Code, 4> dual{};
      for (int i = 0; i < 4; ++i)
        dual[std::size_t(i)] = F->add(F->mul(Code(a), d1[std::size_t(i)]), F->mul(Code(b), d2[std::size_t(i)]));
      bool nonzero = false;
      for (Code c : dual) nonzero |= (c != 0);
      REQUIRE(nonzero);
      PlaneP3 piL;
      piL.dual = dual;
      CHECK(line_in_plane(*F, L, piL));
    }
  }
}

TEST_CASE("plane coordinates round-trip") {
  auto F = FieldCtx::make(5, 1);
  const auto pi = plane_span(*F, make_point(*F, {1, 0, 0, 1}), make_point(*F, {0, 1, 0, 2}),
                             make_point(*F, {0, 0, 1, 3}));
  auto basis = plane_basis(*F, pi);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    // Random point on the plane.
    std::array<Code, 5> raw{};
    bool nz = false;
    while (!nz) {
      raw = {};
      for (int j = 0; j < 3; ++j) {
        const Code y = Code(rng() % 5);
        for (int i = 0; i < 4; ++i)
          raw[std::size_t(i)] = F->add(raw[std::size_t(i)], F->mul(y, basis[std::size_t(j)].c[std::size_t(i)]));
      }
      for (int i = 0; i < 4; ++i) nz |= raw[std::size_t(i)] != 0;
    }
    const auto p = normalize_point(*F, 3, raw);
    const auto y = plane_coordinates(*F, p, basis);
    std::array<Code, 5> back{};
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 4; ++i)
        back[std::size_t(i)] = F->add(back[std::size_t(i)], F->mul(y.c[std::size_t(j)], basis[std::size_t(j)].c[std::size_t(i)]));
    CHECK(normalize_point(*F, 3, back) == p);
  }
}

TEST_CASE("conic rank and splitting") {
  for (auto [p, n] : {std::pair{2, 1}, {2, 2}, {3, 1}, {5, 1}}) {
    auto F = FieldCtx::make(p, n);
    // Two distinct lines: Y0 * Y1.
    const auto pair = form_from(*F, 3, 2, {{{1, 1, 0, 0, 0}, 1}});
    CHECK(conic_rank(*F, pair) == 2);
    auto split = conic_split(*F, pair);
    REQUIRE(split.has_value());
    // Double line: Y0^2.
    const auto dbl = form_from(*F, 3, 2, {{{2, 0, 0, 0, 0}, 1}});
    CHECK(conic_rank(*F, dbl) == 1);
    auto sd = conic_split(*F, dbl);
    REQUIRE(sd.has_value());
    CHECK(sd->first == sd->second);
    // Smooth conic: Y0 Y1 + Y2^2 (rank 3 in every characteristic).
    const auto smooth = form_from(*F, 3, 2, {{{1, 1, 0, 0, 0}, 1}, {{0, 0, 2, 0, 0}, 1}});
    CHECK(conic_rank(*F, smooth) == 3);
  }
}

TEST_CASE("conic split factors the conic, randomized") {
  for (auto [p, n] : {std::pair{2, 2}, {3, 1}, {5, 1}, {2, 3}}) {
    auto F = FieldCtx::make(p, n);
    std::mt19937 rng(p * 100 + n);
    int produced = 0;
    while (produced < 25) {
      // Random pair of lines through a common point.
      std::array<Code, 3> l1{}, l2{};
      for (auto& c : l1) c = Code(rng() % unsigned(F->q()));
      for (auto& c : l2) c = Code(rng() % unsigned(F->q()));
      bool nz1 = l1[0] || l1[1] || l1[2], nz2 = l2[0] || l2[1] || l2[2];
      if (!nz1 || !nz2) continue;
      // Build the product form.
      HomForm prod = zero_form(3, 2);
      const auto& tbl = monomials(3, 2);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          std::array<std::uint8_t, 5> e{};
          e[std::size_t(i)]++;
          e[std::size_t(j)]++;
          const int k = tbl.index(e);
          prod.coeffs[std::size_t(k)] = F->add(prod.coeffs[std::size_t(k)], F->mul(l1[std::size_t(i)], l2[std::size_t(j)]));
        }
      if (prod.is_zero()) continue;
      const int rank = conic_rank(*F, prod);
      REQUIRE(rank <= 2);
      auto split = conic_split(*F, prod);
      REQUIRE(split.has_value());
      ++produced;
      // The returned covectors cut out the same zero set.
      for (int a = 0; a < F->q(); ++a)
        for (int b = 0; b < 2; ++b) {
          const Code y[3] = {Code(a), Code(b), 1};
          const bool on_prod = form_eval(*F, prod, y) == 0;
          auto dot = [&](const std::array<Code, 3>& L) {
            Code acc = 0;
            for (int i = 0; i < 3; ++i) acc = F->add(acc, F->mul(L[std::size_t(i)], y[i]));
            return acc;
          };
          const bool on_split = dot(split->first) == 0 || dot(split->second) == 0;
          CHECK(on_prod == on_split);
        }
    }
  }
}
