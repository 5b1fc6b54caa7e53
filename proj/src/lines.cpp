/*
   Copyright 2026 The delpezzo authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "delpezzo/lines.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "delpezzo/common.hpp"

namespace delpezzo::lines {

using cubic::eval_form;
using ffield::Embedding;
using ffield::FieldCtx;
using projgeom::form_eval;
using projgeom::HomForm;
using projgeom::incidence;
using projgeom::line_through;
using projgeom::PlaneP3;

namespace {

// Lexicographic comparison of lines by their RREF entries (field order).
bool line_lex_less(const FieldCtx& F, const LineP3& a, const LineP3& b) {
  for (int i = 0; i < 8; ++i) {
    if (a.m[std::size_t(i)] == b.m[std::size_t(i)]) continue;
    return F.lex_less(a.m[std::size_t(i)], b.m[std::size_t(i)]);
  }
  return false;
}

// Lines on S through the surface point pt: directions v in the tangent plane
// with vanishing second polar and f(v) = 0.  The binary cubic
// f(s pt + t v) then has every coefficient zero.
void lines_through_point(const CubicSurface::Analysis& A, const ProjPoint& pt,
                         std::vector<LineP3>& out) {
  const auto& B = *A.B;
  std::array<Code, 4> grad{};
  bool nonzero = false;
  for (int i = 0; i < 4; ++i) {
    grad[std::size_t(i)] = form_eval(B, A.grad[std::size_t(i)], pt);
    nonzero |= grad[std::size_t(i)] != 0;
  }
  if (!nonzero) throw internal_error("pencil test at a singular point");
  // Tangent directions: kernel of the gradient covector, minus pt itself.
  std::vector<std::array<Code, 5>> rows{{grad[0], grad[1], grad[2], grad[3], 0}};
  const int rank = projgeom::rref(B, rows, 4);
  (void)rank;
  std::vector<std::array<Code, 5>> kern;
  {
    std::vector<bool> is_pivot(4, false);
    int c = 0;
    while (c < 4 && rows[0][std::size_t(c)] == 0) ++c;
    is_pivot[std::size_t(c)] = true;
    for (int j = 0; j < 4; ++j) {
      if (is_pivot[std::size_t(j)]) continue;
      std::array<Code, 5> v{};
      v[std::size_t(j)] = 1;
      v[std::size_t(c)] = B.neg(rows[0][std::size_t(j)]);
      kern.push_back(v);
    }
  }
  // Two kernel vectors completing pt to a basis of the tangent plane.
  std::array<Code, 5> u1{}, u2{};
  {
    bool found = false;
    for (std::size_t i = 0; i < kern.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < kern.size() && !found; ++j) {
        std::vector<std::array<Code, 5>> test{{pt.c[0], pt.c[1], pt.c[2], pt.c[3], 0},
                                              kern[i], kern[j]};
        if (projgeom::rref(B, test, 4) == 3) {
          u1 = kern[i];
          u2 = kern[j];
          found = true;
        }
      }
    }
    if (!found) throw internal_error("tangent plane basis not found");
  }
  // Second polar at pt as a quadratic in the direction: Q(v) = sum pt_i df_i(v).
  auto polar = [&](const std::array<Code, 5>& v) {
    Code acc = 0;
    for (int i = 0; i < 4; ++i)
      acc = B.add(acc, B.mul(pt.c[std::size_t(i)], form_eval(B, A.grad[std::size_t(i)], v.data())));
    return acc;
  };
  const Code q20 = polar(u1);
  const Code q02 = polar(u2);
  std::array<Code, 5> u12{};
  for (int i = 0; i < 4; ++i) u12[std::size_t(i)] = B.add(u1[std::size_t(i)], u2[std::size_t(i)]);
  const Code q11 = B.sub(B.sub(polar(u12), q20), q02);
  // Roots (a : b) of q20 a^2 + q11 ab + q02 b^2.
  std::vector<std::pair<Code, Code>> dirs;
  if (q20 == 0 && q11 == 0 && q02 == 0) {
    for (int b = 0; b < B.q(); ++b) dirs.emplace_back(1, Code(b));
    dirs.emplace_back(0, 1);
  } else {
    const Code coeffs[3] = {q02, q11, q20};
    Code rts[4];
    const int cnt = ffield::small_distinct_roots(B, coeffs, 2, rts);
    for (int i = 0; i < cnt; ++i) dirs.emplace_back(rts[i], 1);
    if (q20 == 0) dirs.emplace_back(1, 0);
  }
  for (const auto& [a, b] : dirs) {
    std::array<Code, 5> v{};
    bool vz = true;
    for (int i = 0; i < 4; ++i) {
      v[std::size_t(i)] = B.add(B.mul(a, u1[std::size_t(i)]), B.mul(b, u2[std::size_t(i)]));
      vz &= v[std::size_t(i)] == 0;
    }
    if (vz) continue;
    if (form_eval(B, A.form, v.data()) != 0) continue;
    const ProjPoint dir = projgeom::normalize_point(B, 3, v);
    out.push_back(line_through(B, pt, dir));
  }
}

// Data for expanding the pencil of planes through a known line on S.
struct PencilExpander {
  const CubicSurface::Analysis* A;
  LineP3 ell;
  std::array<Code, 4> phi0{}, phi1{};  // dual pencil basis
  std::array<HomForm, 4> grad_on_line; // partials restricted to the line (binary quadratics)

  PencilExpander(const CubicSurface::Analysis& analysis, const LineP3& line) : A(&analysis), ell(line) {
    auto [a, b] = projgeom::plane_pencil(*A->B, ell);
    phi0 = a;
    phi1 = b;
    for (int i = 0; i < 4; ++i)
      grad_on_line[std::size_t(i)] = projgeom::restrict_to_line(*A->B, A->grad[std::size_t(i)], ell);
  }

  // Collects the other lines lying in degenerate planes of the pencil.
  void expand(std::vector<LineP3>& out) const {
    const auto& B = *A->B;
    const auto& tbl2 = projgeom::monomials(3, 2);
    const int i20 = tbl2.index({2, 0, 0, 0, 0});
    const int i11 = tbl2.index({1, 1, 0, 0, 0});
    const int i02 = tbl2.index({0, 2, 0, 0, 0});
    const int i101 = tbl2.index({1, 0, 1, 0, 0});
    const int i011 = tbl2.index({0, 1, 1, 0, 0});
    const int i002 = tbl2.index({0, 0, 2, 0, 0});
    const auto& bq = projgeom::monomials(2, 2);
    const int b20 = bq.index({2, 0, 0, 0, 0});
    const int b11 = bq.index({1, 1, 0, 0, 0});
    const int b02 = bq.index({0, 2, 0, 0, 0});
    for (int t = 0; t <= B.q(); ++t) {
      const Code t0 = t == B.q() ? Code(0) : Code(1);
      const Code t1 = t == B.q() ? Code(1) : Code(t);
      std::array<Code, 4> dual{};
      bool dz = true;
      for (int i = 0; i < 4; ++i) {
        dual[std::size_t(i)] = B.add(B.mul(t0, phi0[std::size_t(i)]), B.mul(t1, phi1[std::size_t(i)]));
        dz &= dual[std::size_t(i)] == 0;
      }
      if (dz) continue;
      // Point w of the plane off the line.
      std::vector<std::array<Code, 5>> row{{dual[0], dual[1], dual[2], dual[3], 0}};
      projgeom::rref(B, row, 4);
      std::array<Code, 5> w{};
      {
        int c = 0;
        while (c < 4 && row[0][std::size_t(c)] == 0) ++c;
        bool found = false;
        for (int j = 0; j < 4 && !found; ++j) {
          if (j == c) continue;
          std::array<Code, 5> cand{};
          cand[std::size_t(j)] = 1;
          cand[std::size_t(c)] = B.neg(row[0][std::size_t(j)]);
          ProjPoint wp = projgeom::normalize_point(B, 3, cand);
          if (!projgeom::point_on_line(B, wp, ell)) {
            w = cand;
            found = true;
          }
        }
        if (!found) throw internal_error("plane of the pencil collapsed onto the line");
      }
      // Residual conic of the section in coordinates (Y0, Y1, Y2) for the
      // basis (r0, r1, w): F = f(Y0 r0 + Y1 r1 + Y2 w) = Y2 * conic.
      HomForm conic = projgeom::zero_form(3, 2);
      // Y2^0 part of the conic: sum_i w_i * (df_i restricted to the line).
      for (int i = 0; i < 4; ++i) {
        if (w[std::size_t(i)] == 0) continue;
        const auto& g = grad_on_line[std::size_t(i)];
        conic.coeffs[std::size_t(i20)] =
            B.add(conic.coeffs[std::size_t(i20)], B.mul(w[std::size_t(i)], g.coeffs[std::size_t(b20)]));
        conic.coeffs[std::size_t(i11)] =
            B.add(conic.coeffs[std::size_t(i11)], B.mul(w[std::size_t(i)], g.coeffs[std::size_t(b11)]));
        conic.coeffs[std::size_t(i02)] =
            B.add(conic.coeffs[std::size_t(i02)], B.mul(w[std::size_t(i)], g.coeffs[std::size_t(b02)]));
      }
      // Y2^1 part: sum_i r_i * df_i(w), for each of the two line basis rows.
      std::array<Code, 4> grad_w{};
      for (int i = 0; i < 4; ++i) grad_w[std::size_t(i)] = form_eval(B, A->grad[std::size_t(i)], w.data());
      Code c101 = 0, c011 = 0;
      for (int i = 0; i < 4; ++i) {
        c101 = B.add(c101, B.mul(ell.m[std::size_t(i)], grad_w[std::size_t(i)]));
        c011 = B.add(c011, B.mul(ell.m[std::size_t(4 + i)], grad_w[std::size_t(i)]));
      }
      conic.coeffs[std::size_t(i101)] = c101;
      conic.coeffs[std::size_t(i011)] = c011;
      // Y2^2 part: f(w).
      conic.coeffs[std::size_t(i002)] = form_eval(B, A->form, w.data());
      if (conic.is_zero()) {
        // The plane lies on the surface; impossible for an irreducible cubic.
        throw internal_error("plane section vanished identically");
      }
      if (projgeom::conic_rank(B, conic) >= 3) continue;
      auto split = projgeom::conic_split(B, conic);
      if (!split) continue;  // components live in a quadratic extension
      for (const auto& plane_line : {split->first, split->second}) {
        auto [pa, pb] = projgeom::plane_line_points(B, plane_line);
        auto to_p3 = [&](const std::array<Code, 3>& y) {
          std::array<Code, 5> raw{};
          for (int i = 0; i < 4; ++i) {
            Code acc = B.mul(y[0], ell.m[std::size_t(i)]);
            acc = B.add(acc, B.mul(y[1], ell.m[std::size_t(4 + i)]));
            acc = B.add(acc, B.mul(y[2], w[std::size_t(i)]));
            raw[std::size_t(i)] = acc;
          }
          return projgeom::normalize_point(B, 3, raw);
        };
        out.push_back(line_through(B, to_p3(pa), to_p3(pb)));
      }
    }
  }
};

std::vector<LineP3> propagate(const CubicSurface::Analysis& A, std::vector<LineP3> seeds) {
  std::set<LineP3> known(seeds.begin(), seeds.end());
  std::vector<LineP3> queue(known.begin(), known.end());
  while (!queue.empty()) {
    const LineP3 ell = queue.back();
    queue.pop_back();
    PencilExpander exp(A, ell);
    std::vector<LineP3> found;
    exp.expand(found);
    for (const auto& L : found) {
      if (known.insert(L).second) queue.push_back(L);
    }
    if (known.size() > 27) throw internal_error("more than 27 lines found; broken configuration");
  }
  return {known.begin(), known.end()};
}

int line_min_degree(const FieldCtx& B, const LineP3& L, int r, int K) {
  for (int d = 1; d <= K; ++d) {
    if (K % d != 0) continue;
    if (projgeom::line_in_subfield(B, L, r * d)) return d;
  }
  throw internal_error("line not defined over the splitting field");
}

}  // namespace

int LineConfiguration::line_index(const LineP3& L) const {
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (lines[i].line == L) return int(i);
  return -1;
}

std::vector<std::vector<int>> LineConfiguration::frobenius_orbits() const {
  std::vector<std::vector<int>> orbits;
  std::array<bool, 27> seen{};
  for (int i = 0; i < 27; ++i) {
    if (seen[std::size_t(i)]) continue;
    std::vector<int> orb;
    int j = i;
    while (!seen[std::size_t(j)]) {
      seen[std::size_t(j)] = true;
      orb.push_back(j);
      j = frobenius_perm[std::size_t(j)];
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

std::vector<int> LineConfiguration::incidence_row_sums() const {
  std::vector<int> sums(27, 0);
  for (int i = 0; i < 27; ++i)
    for (int j = 0; j < 27; ++j) sums[std::size_t(i)] += incidence[std::size_t(i)][std::size_t(j)];
  return sums;
}

std::vector<int> LineConfiguration::frobenius_cycle_type() const {
  std::vector<int> type;
  for (const auto& orb : frobenius_orbits()) type.push_back(int(orb.size()));
  std::sort(type.begin(), type.end());
  return type;
}

std::vector<LineP3> lines_visible_at_level(const CubicSurface& S, int k) {
  const auto& A = S.analysis(k);
  std::set<LineP3> found;
  S.for_each_point(k, [&](const ProjPoint& pt) {
    std::vector<LineP3> ls;
    lines_through_point(A, pt, ls);
    found.insert(ls.begin(), ls.end());
  });
  return {found.begin(), found.end()};
}

std::vector<LineP3> all_lines_on_surface_bruteforce(const CubicSurface& S, int k) {
  const auto& A = S.analysis(k);
  const auto& B = *A.B;
  if (B.q() > 64) throw cap_error("brute-force line enumeration is enabled only for q^k <= 64");
  const std::int64_t q = B.q();
  // Enumerate canonical RREF shapes: pivot pair and free entries.
  struct Shape {
    int piv0, piv1;
    std::array<int, 4> free_pos;  // (row, col) packed: row*4+col, -1 when unused
    int nfree;
  };
  std::vector<Shape> shapes;
  for (int p0 = 0; p0 < 4; ++p0) {
    for (int p1 = p0 + 1; p1 < 4; ++p1) {
      Shape sh{p0, p1, {-1, -1, -1, -1}, 0};
      for (int col = 0; col < 4; ++col) {
        if (col == p0 || col == p1) continue;
        if (col > p0) sh.free_pos[std::size_t(sh.nfree++)] = 0 * 4 + col;  // row 0
      }
      for (int col = 0; col < 4; ++col) {
        if (col == p0 || col == p1) continue;
        if (col > p1) sh.free_pos[std::size_t(sh.nfree++)] = 1 * 4 + col;  // row 1
      }
      // Free entries in row 0 must be zero at column p1 (RREF): excluded above
      // because col == p1 is skipped; entries between p0 and p1 in row 0 are
      // free, entries after p1 in both rows are free.
      shapes.push_back(sh);
    }
  }
  std::vector<LineP3> result;
  for (const auto& sh : shapes) {
    std::int64_t total = 1;
    for (int i = 0; i < sh.nfree; ++i) total *= q;
    auto chunk = parallel_map_merge<LineP3>(total, [&](std::int64_t idx, std::vector<LineP3>& out) {
      LineP3 L{};
      L.m[std::size_t(sh.piv0)] = 1;
      L.m[std::size_t(4 + sh.piv1)] = 1;
      std::int64_t rem = idx;
      for (int i = 0; i < sh.nfree; ++i) {
        const int pos = sh.free_pos[std::size_t(i)];
        L.m[std::size_t((pos / 4) * 4 + (pos % 4))] = Code(rem % q);
        rem /= q;
      }
      // Quick reject: evaluate at up to 4 points of the line.
      Code xy[4];
      const Code lambdas[2] = {0, 1};
      for (Code lam : lambdas) {
        for (int i = 0; i < 4; ++i)
          xy[i] = B.add(B.mul(lam, L.m[std::size_t(i)]), L.m[std::size_t(4 + i)]);
        if (form_eval(B, A.form, xy) != 0) return;
      }
      for (int i = 0; i < 4; ++i) xy[i] = L.m[std::size_t(i)];
      if (form_eval(B, A.form, xy) != 0) return;
      if (!projgeom::restrict_to_line(B, A.form, L).is_zero()) return;
      out.push_back(L);
    });
    result.insert(result.end(), chunk.begin(), chunk.end());
  }
  std::sort(result.begin(), result.end());
  return result;
}

LineConfiguration find_lines(const CubicSurface& S) {
  if (!S.smoothness().smooth)
    throw singular_error("surface failed the smoothness scan; no line configuration");
  const int kmax = S.max_extension();
  // A Frobenius orbit of minimal length 5, 6, 8, 10 or 12 on the 27 lines is
  // impossible (27 is odd and not divisible by 5; the only all-large cycle
  // type is (9,9,9)), so the first line appears at one of these degrees.
  static constexpr int kFirstLevels[] = {1, 2, 3, 4, 9};
  int d0 = 0;
  std::vector<LineP3> seeds;
  for (int k : kFirstLevels) {
    if (k > kmax) break;
    seeds = lines_visible_at_level(S, k);
    if (!seeds.empty()) { d0 = k; break; }
  }
  if (d0 == 0)
    throw cap_error("no line found within the field cap (splitting field exceeds the search bound)");
  const auto& A0 = S.analysis(d0);
  for (int K = d0; K <= kmax; K += d0) {
    const auto& A = S.analysis(K);
    std::vector<LineP3> lifted;
    if (K == d0) {
      lifted = seeds;
    } else {
      Embedding emb(A0.B, A.B, A0.base_gen, A.base_gen);
      for (const auto& L : seeds) {
        LineP3 M{};
        for (int i = 0; i < 8; ++i) M.m[std::size_t(i)] = emb(L.m[std::size_t(i)]);
        lifted.push_back(M);
      }
    }
    auto all = propagate(A, std::move(lifted));
    if (all.size() < 27) continue;
    // Assemble the configuration.
    LineConfiguration cfg;
    cfg.B = A.B;
    std::vector<LineOnSurface> ls;
    for (const auto& L : all) ls.push_back({L, line_min_degree(*A.B, L, S.r(), K)});
    int lcm = 1;
    for (const auto& l : ls) lcm = int(std::lcm(lcm, l.min_degree));
    if (lcm != K)
      throw internal_error("splitting degree mismatch: lcm of line degrees " + std::to_string(lcm) +
                           " at analysis level " + std::to_string(K));
    cfg.K = lcm;
    std::sort(ls.begin(), ls.end(), [&](const LineOnSurface& x, const LineOnSurface& y) {
      if (x.min_degree != y.min_degree) return x.min_degree < y.min_degree;
      return line_lex_less(*A.B, x.line, y.line);
    });
    cfg.lines = std::move(ls);
    for (int i = 0; i < 27; ++i)
      for (int j = i + 1; j < 27; ++j) {
        const int inc = incidence(*A.B, cfg.lines[std::size_t(i)].line, cfg.lines[std::size_t(j)].line);
        cfg.incidence[std::size_t(i)][std::size_t(j)] = std::uint8_t(inc);
        cfg.incidence[std::size_t(j)][std::size_t(i)] = std::uint8_t(inc);
      }
    for (int i = 0; i < 27; ++i) {
      const LineP3 img = projgeom::line_frobenius(*A.B, cfg.lines[std::size_t(i)].line, std::uint64_t(S.q()));
      const int j = cfg.line_index(img);
      if (j < 0) throw internal_error("Frobenius image of a line is not in the configuration");
      cfg.frobenius_perm[std::size_t(i)] = j;
    }
    // Eckardt points: points where three lines concur.
    std::map<ProjPoint, std::vector<int>> through;
    for (int i = 0; i < 27; ++i)
      for (int j = i + 1; j < 27; ++j) {
        if (!cfg.incidence[std::size_t(i)][std::size_t(j)]) continue;
        auto x = projgeom::line_intersection(*A.B, cfg.lines[std::size_t(i)].line, cfg.lines[std::size_t(j)].line);
        if (!x) throw internal_error("incident lines without an intersection point");
        auto& v = through[*x];
        for (int idx : {i, j})
          if (std::find(v.begin(), v.end(), idx) == v.end()) v.push_back(idx);
      }
    for (auto& [pt, idxs] : through) {
      if (idxs.size() < 3) continue;
      if (idxs.size() > 3) throw internal_error("more than three lines through one point");
      std::sort(idxs.begin(), idxs.end());
      cfg.eckardt.push_back({pt, {idxs[0], idxs[1], idxs[2]}});
    }
    return cfg;
  }
  throw cap_error("splitting field exceeds the search bound (cap " + std::to_string(S.cap()) + ")");
}

bool has_rational_line(const LineConfiguration& cfg) {
  for (const auto& l : cfg.lines)
    if (l.min_degree == 1) return true;
  return false;
}

MinimalityResult is_minimal(const LineConfiguration& cfg) {
  // A union of orbits is pairwise skew iff each orbit in it is, so existence
  // of a contractible Galois-stable set reduces to single orbits.
  for (const auto& orb : cfg.frobenius_orbits()) {
    bool skew = true;
    for (std::size_t a = 0; a < orb.size() && skew; ++a)
      for (std::size_t b = a + 1; b < orb.size() && skew; ++b)
        if (cfg.incidence[std::size_t(orb[a])][std::size_t(orb[b])]) skew = false;
    if (skew) return {false, orb};
  }
  return {true, {}};
}

LineConfiguration embed_configuration(const CubicSurface& S, const LineConfiguration& cfg, int M) {
  if (M % cfg.K != 0) throw input_error("target degree must be a multiple of the splitting degree");
  if (M == cfg.K) return cfg;
  const auto& A0 = S.analysis(cfg.K);
  const auto& A = S.analysis(M);
  Embedding emb(A0.B, A.B, A0.base_gen, A.base_gen);
  std::vector<LineP3> lifted;
  for (const auto& l : cfg.lines) {
    LineP3 L{};
    for (int i = 0; i < 8; ++i) L.m[std::size_t(i)] = emb(l.line.m[std::size_t(i)]);
    lifted.push_back(L);
  }
  LineConfiguration out;
  out.B = A.B;
  out.K = cfg.K;
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    out.lines.push_back({lifted[i], cfg.lines[i].min_degree});
    if (line_min_degree(*A.B, lifted[i], S.r(), M) != cfg.lines[i].min_degree)
      throw internal_error("min degree changed under re-embedding");
    if (!projgeom::restrict_to_line(*A.B, A.form, lifted[i]).is_zero())
      throw internal_error("re-embedded line is not on the surface");
  }
  out.incidence = cfg.incidence;
  out.frobenius_perm = cfg.frobenius_perm;
  for (const auto& e : cfg.eckardt) {
    ProjPoint pt;
    pt.dim = 3;
    for (int i = 0; i < 4; ++i) pt.c[std::size_t(i)] = emb(e.point.c[std::size_t(i)]);
    out.eckardt.push_back({pt, e.line_indices});
  }
  return out;
}

LocusSplit points_on_exceptional_locus(const CubicSurface& S, const LineConfiguration& cfg, int k) {
  const int M = int(std::lcm(k, cfg.K));
  std::int64_t size = 1;
  for (int i = 0; i < M * S.r(); ++i) {
    size *= S.p();
    if (size > S.cap())
      throw cap_error("exceptional-locus split needs F_{q^" + std::to_string(M) + "}, above the cap");
  }
  const LineConfiguration big = embed_configuration(S, cfg, M);
  const auto& Ak = S.analysis(k);
  const auto& AM = S.analysis(M);
  Embedding emb(Ak.B, AM.B, Ak.base_gen, AM.base_gen);
  LocusSplit out;
  S.for_each_point(k, [&](const ProjPoint& pt) {
    ProjPoint q;
    q.dim = 3;
    for (int i = 0; i < 4; ++i) q.c[std::size_t(i)] = emb(pt.c[std::size_t(i)]);
    bool on = false;
    for (const auto& l : big.lines) {
      if (projgeom::point_on_line(*AM.B, q, l.line)) { on = true; break; }
    }
    if (on) {
      ++out.on_lines;
    } else {
      ++out.off_lines;
      out.off_points.push_back(q);
    }
  });
  return out;
}

}  // namespace delpezzo::lines
