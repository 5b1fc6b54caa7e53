#include <random>
#include <set>

#include "doctest.h"
#include "delpezzo/ffield.hpp"

using namespace delpezzo;
using namespace delpezzo::ffield;

namespace {

// Independent irreducibility oracle: a degree-2 polynomial over F_p is
// irreducible iff it has no root.
bool quadratic_irreducible_by_root_scan(int p, const std::vector<int>& f) {
  for (int x = 0; x < p; ++x) {
    long v = 0;
    for (int i = int(f.size()); i-- > 0;) v = (v * x + f[std::size_t(i)]) % p;
    if (v == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("make_field picks the canonical modulus") {
  auto f4 = FieldCtx::make(2, 2);
  CHECK(f4->modulus() == std::vector<int>{1, 1, 1});  // t^2+t+1

  auto f2 = FieldCtx::make(2, 1);
  CHECK(f2->modulus() == std::vector<int>{0, 1});  // t

  auto f9 = FieldCtx::make(3, 2);
  CHECK(quadratic_irreducible_by_root_scan(3, f9->modulus()));
  CHECK(f9->modulus().size() == 3);
  CHECK(f9->modulus().back() == 1);

  // Same (p, n) gives the identical presentation (and the identical object).
  CHECK(FieldCtx::make(3, 2).get() == f9.get());
}

TEST_CASE("make_field rejects bad input") {
  CHECK_THROWS_AS(FieldCtx::make(4, 1), input_error);
  CHECK_THROWS_AS(FieldCtx::make(2, 14), cap_error);
  CHECK_THROWS_AS(FieldCtx::make(2, 5, 16), cap_error);
}

TEST_CASE("field arithmetic in F_4") {
  auto F = FieldCtx::make(2, 2);
  const Code alpha = F->from_coeffs({0, 1});
  const Code alpha1 = F->from_coeffs({1, 1});
  CHECK(F->mul(alpha, alpha) == alpha1);  // alpha^2 = alpha+1
  CHECK(F->inv(alpha) == alpha1);
  CHECK(F->mul(alpha, alpha1) == F->one());
  CHECK_THROWS_AS(F->inv(0), input_error);
  CHECK_THROWS_AS(F->div(alpha, 0), input_error);
}

TEST_CASE("multiplicative group of F_8") {
  auto F = FieldCtx::make(2, 3);
  for (int g = 1; g < 8; ++g) {
    CHECK(F->pow_sqm(Code(g), 7) == F->one());
  }
}

TEST_CASE("unit group order, exhaustively, for a spread of fields") {
  for (auto [p, n] : {std::pair{2, 6}, {3, 4}, {5, 3}, {7, 2}, {13, 1}, {2, 13}}) {
    auto F = FieldCtx::make(p, n);
    for (int x = 1; x < F->q(); ++x) {
      REQUIRE(F->pow(Code(x), F->q() - 1) == F->one());
    }
  }
}

TEST_CASE("pow by squaring matches table pow") {
  auto F = FieldCtx::make(3, 5);
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Code a = Code(rng() % unsigned(F->q()));
    const std::uint64_t e = rng() % 4096;
    if (a == 0 && e == 0) continue;
    CHECK(F->pow_sqm(a, e) == (a == 0 ? Code(0) : F->pow(a, std::int64_t(e))));
  }
}

TEST_CASE("frobenius basics") {
  auto F4 = FieldCtx::make(2, 2);
  const Code alpha = F4->from_coeffs({0, 1});
  CHECK(F4->frobenius(alpha, 2) == F4->from_coeffs({1, 1}));  // alpha -> alpha+1
  CHECK(F4->frobenius(F4->one(), 2) == F4->one());

  // Gal(F_64 / F_4) has order 3.
  auto F64 = FieldCtx::make(2, 6);
  for (int x = 0; x < 64; ++x) {
    Code y = Code(x);
    for (int i = 0; i < 3; ++i) y = F64->frobenius(y, 4);
    CHECK(y == Code(x));
  }
  CHECK_THROWS_AS(F64->frobenius(1, 6), input_error);
}

TEST_CASE("frobenius is a ring homomorphism on random pairs") {
  for (auto [p, n] : {std::pair{2, 6}, {3, 4}, {5, 3}}) {
    auto F = FieldCtx::make(p, n);
    std::mt19937 rng(42);
    const auto q0 = std::uint64_t(p);
    for (int i = 0; i < 1000; ++i) {
      const Code a = Code(rng() % unsigned(F->q()));
      const Code b = Code(rng() % unsigned(F->q()));
      CHECK(F->frobenius(F->add(a, b), q0) == F->add(F->frobenius(a, q0), F->frobenius(b, q0)));
      CHECK(F->frobenius(F->mul(a, b), q0) == F->mul(F->frobenius(a, q0), F->frobenius(b, q0)));
    }
  }
}

TEST_CASE("subfield membership partitions the field") {
  auto F = FieldCtx::make(2, 6);
  const Code alpha64 = embed_generator({1, 1, 1}, *F);  // image of F_4
  CHECK(F->in_subfield(alpha64, 2));
  CHECK_FALSE(F->in_subfield(alpha64, 1));  // F_2 = {0, 1}

  for (int m : {1, 2, 3, 6}) {
    int count = 0;
    for (int x = 0; x < F->q(); ++x)
      if (F->in_subfield(Code(x), m)) ++count;
    CHECK(count == 1 << m);
  }
  int count3 = 0;
  for (int x = 0; x < F->q(); ++x)
    if (F->in_subfield(Code(x), 3)) ++count3;
  CHECK(count3 == 8);  // |F_8|
}

TEST_CASE("roots by exhaustive scan") {
  auto F2 = FieldCtx::make(2, 1);
  Poly f;
  f.c = {1, 1, 1};  // t^2+t+1
  CHECK(roots(*F2, f).empty());

  auto F4 = FieldCtx::make(2, 2);
  auto r = roots(*F4, f);
  REQUIRE(r.size() == 2);
  CHECK(r[0].first == F4->from_coeffs({0, 1}));
  CHECK(r[1].first == F4->from_coeffs({1, 1}));
  CHECK(r[0].second == 1);

  Poly g;
  g.c = {1, 0, 0, 1};  // t^3+1 splits over F_4
  CHECK(roots(*F4, g).size() == 3);

  Poly zero;
  CHECK_THROWS_AS(roots(*F4, zero), input_error);
}

TEST_CASE("fast distinct roots agree with the scan on random polynomials") {
  std::mt19937 rng(1234);
  for (auto [p, n] : {std::pair{2, 1}, {2, 4}, {2, 9}, {3, 2}, {3, 7}, {5, 3}, {7, 1}, {11, 2}}) {
    auto F = FieldCtx::make(p, n);
    for (int trial = 0; trial < 120; ++trial) {
      const int deg = 1 + int(rng() % 4);
      Poly f;
      f.c.resize(std::size_t(deg) + 1);
      for (auto& c : f.c) c = Code(rng() % unsigned(F->q()));
      f.c.back() = Code(1 + rng() % unsigned(F->q() - 1));
      std::set<Code> scan;
      for (auto& [root, mult] : roots(*F, f)) scan.insert(root);
      auto fast = distinct_roots(*F, f);
      std::set<Code> fast_set(fast.begin(), fast.end());
      REQUIRE(fast.size() == fast_set.size());
      REQUIRE(fast_set == scan);
    }
  }
}

TEST_CASE("small_distinct_roots agrees with the scan across fields and degrees") {
  std::mt19937 rng(31337);
  for (auto [p, n] : {std::pair{2, 2}, {2, 6}, {2, 9}, {2, 12}, {2, 13}, {3, 4}, {3, 8},
                      {5, 4}, {5, 5}, {7, 3}, {11, 2}, {89, 1}}) {
    auto F = FieldCtx::make(p, n);
    for (int trial = 0; trial < 160; ++trial) {
      const int deg = int(rng() % 5);
      Code c[5] = {};
      for (int i = 0; i <= deg; ++i) c[i] = Code(rng() % unsigned(F->q()));
      Code out[4];
      const int cnt = small_distinct_roots(*F, c, deg, out);
      bool all_zero = true;
      for (int i = 0; i <= deg; ++i) all_zero &= (c[i] == 0);
      if (all_zero) {
        CHECK(cnt == -1);
        continue;
      }
      // Oracle: brute scan.
      std::set<Code> expect;
      for (int x = 0; x < F->q(); ++x) {
        Code acc = 0;
        for (int i = deg; i >= 0; --i) acc = F->add(F->mul(acc, Code(x)), c[i]);
        if (acc == 0) expect.insert(Code(x));
      }
      std::set<Code> got(out, out + cnt);
      REQUIRE(got.size() == std::size_t(cnt));
      REQUIRE(got == expect);
    }
  }
}

TEST_CASE("distinct root count over the closure") {
  auto F2 = FieldCtx::make(2, 1);
  Poly f;
  f.c = {1, 1, 1};  // irreducible quadratic: two roots upstairs
  CHECK(distinct_root_count_closure(*F2, f) == 2);
  Poly sq;
  sq.c = {1, 0, 1};  // (t+1)^2 in char 2
  CHECK(distinct_root_count_closure(*F2, sq) == 1);
  auto F3 = FieldCtx::make(3, 1);
  Poly cube;
  cube.c = {2, 0, 0, 1};  // t^3 - 1 = (t - 1)^3 in char 3
  CHECK(distinct_root_count_closure(*F3, cube) == 1);
  Poly mixed;
  mixed.c = {0, 2, 0, 0, 0, 1};  // t(t^4 + 2): t, plus 4 distinct quartic roots
  CHECK(distinct_root_count_closure(*F3, mixed) == 1 + distinct_root_count_closure(*F3, Poly{{2, 0, 0, 0, 1}}));
}

TEST_CASE("embed_generator picks the canonical root") {
  auto F4 = FieldCtx::make(2, 2);
  CHECK(embed_generator({1, 1, 1}, *F4) == F4->from_coeffs({0, 1}));

  auto F64 = FieldCtx::make(2, 6);
  const Code rho = embed_generator({1, 1, 1}, *F64);
  // Oracle: scan all 64 elements for roots and take the lex-least.
  bool found = false;
  Code best = 0;
  for (int x = 0; x < 64; ++x) {
    const Code cx = Code(x);
    const Code v = F64->add(F64->add(F64->mul(cx, cx), cx), F64->one());
    if (v == 0 && (!found || F64->lex_less(cx, best))) { best = cx; found = true; }
  }
  REQUIRE(found);
  CHECK(rho == best);

  CHECK(embed_generator({0, 1}, *F64) == 0);  // t -> 0
  CHECK_THROWS_AS(embed_generator({}, *F64), input_error);
  // Degree 4 does not divide 6: no root.
  auto raise = [&] { return embed_generator({1, 1, 0, 0, 1}, *F64); };
  CHECK_THROWS_AS(raise(), input_error);
}

TEST_CASE("embedding is a ring homomorphism") {
  auto F4 = FieldCtx::make(2, 2);
  auto F64 = FieldCtx::make(2, 6);
  Embedding e(F4, F64);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      CHECK(e(F4->add(Code(a), Code(b))) == F64->add(e(Code(a)), e(Code(b))));
      CHECK(e(F4->mul(Code(a), Code(b))) == F64->mul(e(Code(a)), e(Code(b))));
    }
  }
  auto F9 = FieldCtx::make(3, 2);
  auto F729 = FieldCtx::make(3, 6);
  Embedding e3(F9, F729);
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) {
      CHECK(e3(F9->add(Code(a), Code(b))) == F729->add(e3(Code(a)), e3(Code(b))));
      CHECK(e3(F9->mul(Code(a), Code(b))) == F729->mul(e3(Code(a)), e3(Code(b))));
    }
}

TEST_CASE("anchored embeddings agree on the anchor") {
  auto F4 = FieldCtx::make(2, 2);
  auto F64 = FieldCtx::make(2, 6);
  const Code g4 = F4->from_coeffs({0, 1});
  const Code g64 = embed_generator({1, 1, 1}, *F64);
  Embedding e(F4, F64, g4, g64);
  CHECK(e(g4) == g64);
  // Still a homomorphism.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(e(F4->mul(Code(a), Code(b))) == F64->mul(e(Code(a)), e(Code(b))));
}

TEST_CASE("sqrt") {
  auto F8 = FieldCtx::make(2, 3);
  for (int x = 0; x < 8; ++x) {
    auto [ok, r] = F8->sqrt(Code(x));
    REQUIRE(ok);  // squaring is a bijection in char 2
    CHECK(F8->mul(r, r) == Code(x));
  }
  auto F25 = FieldCtx::make(5, 2);
  int squares = 0;
  for (int x = 0; x < 25; ++x) {
    auto [ok, r] = F25->sqrt(Code(x));
    if (ok) {
      ++squares;
      CHECK(F25->mul(r, r) == Code(x));
    }
  }
  CHECK(squares == 1 + (25 - 1) / 2);
}
