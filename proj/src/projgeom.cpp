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

#include "delpezzo/projgeom.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace delpezzo::projgeom {

namespace {

void gen_tuples(int nvars, int remaining, int pos, std::array<std::uint8_t, 5>& cur,
                std::vector<std::array<std::uint8_t, 5>>& out) {
  if (pos == nvars - 1) {
    cur[std::size_t(pos)] = std::uint8_t(remaining);
    out.push_back(cur);
    cur[std::size_t(pos)] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {  // descending lex
    cur[std::size_t(pos)] = std::uint8_t(e);
    gen_tuples(nvars, remaining - e, pos + 1, cur, out);
  }
  cur[std::size_t(pos)] = 0;
}

struct ProductTable {
  // prod[i * nb + j] = index of exps_a[i] + exps_b[j] in the result table
  std::vector<int> prod;
  int nb = 0;
};

std::recursive_mutex table_mu;
std::map<std::pair<int, int>, MonomialTable> mono_tables;
std::map<std::tuple<int, int, int>, ProductTable> prod_tables;

const ProductTable& product_table(int nvars, int da, int db) {
  std::lock_guard<std::recursive_mutex> lock(table_mu);
  auto key = std::tuple{nvars, da, db};
  auto it = prod_tables.find(key);
  if (it != prod_tables.end()) return it->second;
  const auto& A = monomials(nvars, da);
  const auto& B = monomials(nvars, db);
  const auto& R = monomials(nvars, da + db);
  ProductTable t;
  t.nb = int(B.exps.size());
  t.prod.resize(A.exps.size() * B.exps.size());
  for (std::size_t i = 0; i < A.exps.size(); ++i) {
    for (std::size_t j = 0; j < B.exps.size(); ++j) {
      std::array<std::uint8_t, 5> e{};
      for (int v = 0; v < nvars; ++v)
        e[std::size_t(v)] = std::uint8_t(A.exps[i][std::size_t(v)] + B.exps[j][std::size_t(v)]);
      t.prod[i * B.exps.size() + j] = R.index(e);
    }
  }
  return prod_tables.emplace(key, std::move(t)).first->second;
}

}  // namespace

int MonomialTable::index(const std::array<std::uint8_t, 5>& e) const {
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] == e) return int(i);
  return -1;
}

const MonomialTable& monomials(int nvars, int degree) {
  std::lock_guard<std::recursive_mutex> lock(table_mu);
  auto key = std::pair{nvars, degree};
  auto it = mono_tables.find(key);
  if (it != mono_tables.end()) return it->second;
  MonomialTable t;
  std::array<std::uint8_t, 5> cur{};
  gen_tuples(nvars, degree, 0, cur, t.exps);
  return mono_tables.emplace(key, std::move(t)).first->second;
}

HomForm zero_form(int nvars, int degree) {
  HomForm f;
  f.nvars = std::uint8_t(nvars);
  f.degree = std::uint8_t(degree);
  f.coeffs.assign(monomials(nvars, degree).exps.size(), 0);
  return f;
}

HomForm form_add(const FieldCtx& F, const HomForm& a, const HomForm& b) {
  if (a.nvars != b.nvars || a.degree != b.degree)
    throw internal_error("form_add shape mismatch");
  HomForm r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = F.add(r.coeffs[i], b.coeffs[i]);
  return r;
}

HomForm form_scale(const FieldCtx& F, const HomForm& a, Code s) {
  HomForm r = a;
  for (auto& c : r.coeffs) c = F.mul(c, s);
  return r;
}

HomForm form_mul(const FieldCtx& F, const HomForm& a, const HomForm& b) {
  if (a.nvars != b.nvars) throw internal_error("form_mul shape mismatch");
  HomForm r = zero_form(a.nvars, a.degree + b.degree);
  const auto& pt = product_table(a.nvars, a.degree, b.degree);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (b.coeffs[j] == 0) continue;
      const int k = pt.prod[i * std::size_t(pt.nb) + j];
      r.coeffs[std::size_t(k)] = F.add(r.coeffs[std::size_t(k)], F.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return r;
}

Code form_eval(const FieldCtx& F, const HomForm& f, const Code* x) {
  // Precompute powers of the variables up to the degree.
  Code pw[5][7];
  for (int v = 0; v < f.nvars; ++v) {
    pw[v][0] = 1;
    for (int e = 1; e <= f.degree; ++e) pw[v][std::size_t(e)] = F.mul(pw[v][std::size_t(e - 1)], x[v]);
  }
  const auto& tbl = monomials(f.nvars, f.degree);
  Code acc = 0;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    Code term = f.coeffs[i];
    const auto& e = tbl.exps[i];
    for (int v = 0; v < f.nvars; ++v)
      if (e[std::size_t(v)] != 0) term = F.mul(term, pw[v][e[std::size_t(v)]]);
    acc = F.add(acc, term);
  }
  return acc;
}

Code form_eval(const FieldCtx& F, const HomForm& f, const ProjPoint& pt) {
  return form_eval(F, f, pt.c.data());
}

std::vector<HomForm> partials(const FieldCtx& F, const HomForm& f) {
  if (f.degree < 1) throw input_error("partials of a constant form");
  const auto& tbl = monomials(f.nvars, f.degree);
  std::vector<HomForm> out;
  out.reserve(f.nvars);
  for (int v = 0; v < f.nvars; ++v) {
    HomForm d = zero_form(f.nvars, f.degree - 1);
    const auto& dtbl = monomials(f.nvars, f.degree - 1);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
      if (f.coeffs[i] == 0) continue;
      auto e = tbl.exps[i];
      if (e[std::size_t(v)] == 0) continue;
      const int mult = e[std::size_t(v)] % F.p();
      if (mult == 0) continue;
      e[std::size_t(v)]--;
      const int k = dtbl.index(e);
      d.coeffs[std::size_t(k)] =
          F.add(d.coeffs[std::size_t(k)], F.mul(f.coeffs[i], F.from_coeffs({mult})));
    }
    out.push_back(std::move(d));
  }
  return out;
}

HomForm substitute(const FieldCtx& F, const HomForm& f,
                   const std::vector<std::array<Code, 5>>& basis) {
  const int new_vars = int(basis.size());
  const auto& tbl = monomials(f.nvars, f.degree);
  // Linear forms in the new variables: row j of `lin` is the coefficient
  // vector of old variable j as a form in the new variables.
  std::vector<HomForm> lin(std::size_t(f.nvars));
  for (int ov = 0; ov < f.nvars; ++ov) {
    lin[std::size_t(ov)] = zero_form(new_vars, 1);
    for (int nv = 0; nv < new_vars; ++nv)
      lin[std::size_t(ov)].coeffs[std::size_t(nv)] = basis[std::size_t(nv)][std::size_t(ov)];
  }
  HomForm acc = zero_form(new_vars, f.degree);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    HomForm term = zero_form(new_vars, 0);
    term.coeffs[0] = f.coeffs[i];
    const auto& e = tbl.exps[i];
    for (int ov = 0; ov < f.nvars; ++ov)
      for (int rep = 0; rep < e[std::size_t(ov)]; ++rep) term = form_mul(F, term, lin[std::size_t(ov)]);
    acc = form_add(F, acc, term);
  }
  return acc;
}

// --- points -----------------------------------------------------------------

ProjPoint normalize_point(const FieldCtx& F, std::uint8_t dim, const std::array<Code, 5>& raw) {
  ProjPoint p;
  p.dim = dim;
  int lead = -1;
  for (int i = 0; i <= dim; ++i)
    if (raw[std::size_t(i)] != 0) { lead = i; break; }
  if (lead < 0) throw internal_error("zero vector is not a projective point");
  const Code s = F.inv(raw[std::size_t(lead)]);
  for (int i = 0; i <= dim; ++i) p.c[std::size_t(i)] = F.mul(raw[std::size_t(i)], s);
  return p;
}

ProjPoint make_point(const FieldCtx& F, std::initializer_list<int> coords) {
  std::array<Code, 5> raw{};
  int i = 0;
  for (int v : coords) {
    int vv = v % F.p();
    if (vv < 0) vv += F.p();
    raw[std::size_t(i++)] = F.from_coeffs({vv});
  }
  return normalize_point(F, std::uint8_t(i - 1), raw);
}

std::int64_t proj_space_size(int dim, int q) {
  std::int64_t n = 0, pw = 1;
  for (int i = 0; i <= dim; ++i) { n += pw; pw *= q; }
  return n;
}

std::vector<ProjPoint> enum_points(int dim, const FieldCtx& F, std::int64_t max_count) {
  const std::int64_t total = proj_space_size(dim, F.q());
  if (total > max_count)
    throw cap_error("P^" + std::to_string(dim) + "(F_" + std::to_string(F.q()) +
                    ") enumeration exceeds cap");
  std::vector<ProjPoint> out;
  out.reserve(std::size_t(total));
  for (int lead = 0; lead <= dim; ++lead) {
    const int free = dim - lead;
    std::vector<Code> tail(std::size_t(free), 0);
    while (true) {
      ProjPoint p;
      p.dim = std::uint8_t(dim);
      p.c[std::size_t(lead)] = 1;
      for (int i = 0; i < free; ++i) p.c[std::size_t(lead + 1 + i)] = tail[std::size_t(i)];
      out.push_back(p);
      int i = free - 1;
      for (; i >= 0; --i) {
        if (++tail[std::size_t(i)] < F.q()) break;
        tail[std::size_t(i)] = 0;
      }
      if (i < 0) break;
    }
  }
  return out;
}

// --- RREF -------------------------------------------------------------------

int rref(const FieldCtx& F, std::vector<std::array<Code, 5>>& rows, int cols) {
  const int nrows = int(rows.size());
  int rank = 0;
  for (int col = 0; col < cols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r)
      if (rows[std::size_t(r)][std::size_t(col)] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(rows[std::size_t(pivot)], rows[std::size_t(rank)]);
    const Code inv = F.inv(rows[std::size_t(rank)][std::size_t(col)]);
    for (int c = col; c < cols; ++c)
      rows[std::size_t(rank)][std::size_t(c)] = F.mul(rows[std::size_t(rank)][std::size_t(c)], inv);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank) continue;
      const Code factor = rows[std::size_t(r)][std::size_t(col)];
      if (factor == 0) continue;
      for (int c = col; c < cols; ++c)
        rows[std::size_t(r)][std::size_t(c)] =
            F.sub(rows[std::size_t(r)][std::size_t(c)], F.mul(factor, rows[std::size_t(rank)][std::size_t(c)]));
    }
    ++rank;
  }
  return rank;
}

// --- lines ------------------------------------------------------------------

LineP3 line_through(const FieldCtx& F, const ProjPoint& a, const ProjPoint& b) {
  if (a == b) throw input_error("line_through needs two distinct points");
  std::vector<std::array<Code, 5>> rows{{}, {}};
  for (int i = 0; i < 4; ++i) {
    rows[0][std::size_t(i)] = a.c[std::size_t(i)];
    rows[1][std::size_t(i)] = b.c[std::size_t(i)];
  }
  if (rref(F, rows, 4) != 2) throw input_error("points do not span a line");
  LineP3 L;
  for (int i = 0; i < 4; ++i) {
    L.m[std::size_t(i)] = rows[0][std::size_t(i)];
    L.m[std::size_t(4 + i)] = rows[1][std::size_t(i)];
  }
  return L;
}

std::vector<ProjPoint> points_on_line(const FieldCtx& F, const LineP3& L) {
  std::vector<ProjPoint> out;
  out.reserve(std::size_t(F.q()) + 1);
  // (s : t) = (1 : t) then (0 : 1); results are already canonical because the
  // basis is RREF.
  for (int t = 0; t < F.q(); ++t) {
    ProjPoint p;
    p.dim = 3;
    for (int i = 0; i < 4; ++i)
      p.c[std::size_t(i)] = F.add(L.m[std::size_t(i)], F.mul(Code(t), L.m[std::size_t(4 + i)]));
    out.push_back(p);
  }
  ProjPoint p;
  p.dim = 3;
  for (int i = 0; i < 4; ++i) p.c[std::size_t(i)] = L.m[std::size_t(4 + i)];
  out.push_back(p);
  return out;
}

bool point_on_line(const FieldCtx& F, const ProjPoint& p, const LineP3& L) {
  std::vector<std::array<Code, 5>> rows{{}, {}, {}};
  for (int i = 0; i < 4; ++i) {
    rows[0][std::size_t(i)] = L.m[std::size_t(i)];
    rows[1][std::size_t(i)] = L.m[std::size_t(4 + i)];
    rows[2][std::size_t(i)] = p.c[std::size_t(i)];
  }
  return rref(F, rows, 4) == 2;
}

int incidence(const FieldCtx& F, const LineP3& a, const LineP3& b) {
  if (a == b) throw input_error("incidence of a line with itself");
  // det of the stacked 4x4 basis: zero iff the lines meet.
  std::array<std::array<Code, 4>, 4> m;
  for (int i = 0; i < 4; ++i) {
    m[0][std::size_t(i)] = a.m[std::size_t(i)];
    m[1][std::size_t(i)] = a.m[std::size_t(4 + i)];
    m[2][std::size_t(i)] = b.m[std::size_t(i)];
    m[3][std::size_t(i)] = b.m[std::size_t(4 + i)];
  }
  // Gaussian elimination determinant.
  Code det = 1;
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = col; r < 4; ++r)
      if (m[std::size_t(r)][std::size_t(col)] != 0) { pivot = r; break; }
    if (pivot < 0) return 1;  // singular: lines meet
    if (pivot != col) std::swap(m[std::size_t(pivot)], m[std::size_t(col)]);
    det = F.mul(det, m[std::size_t(col)][std::size_t(col)]);
    const Code inv = F.inv(m[std::size_t(col)][std::size_t(col)]);
    for (int r = col + 1; r < 4; ++r) {
      const Code factor = F.mul(m[std::size_t(r)][std::size_t(col)], inv);
      if (factor == 0) continue;
      for (int c = col; c < 4; ++c)
        m[std::size_t(r)][std::size_t(c)] =
            F.sub(m[std::size_t(r)][std::size_t(c)], F.mul(factor, m[std::size_t(col)][std::size_t(c)]));
    }
  }
  return det == 0 ? 1 : 0;
}

std::optional<ProjPoint> line_intersection(const FieldCtx& F, const LineP3& a, const LineP3& b) {
  // Solve x*a0 + y*a1 = z*b0 + w*b1: kernel of the 4x4 [a0 a1 -b0 -b1]^T.
  std::vector<std::array<Code, 5>> rows{{}, {}, {}, {}};
  for (int i = 0; i < 4; ++i) {
    rows[std::size_t(i)][0] = a.m[std::size_t(i)];
    rows[std::size_t(i)][1] = a.m[std::size_t(4 + i)];
    rows[std::size_t(i)][2] = F.neg(b.m[std::size_t(i)]);
    rows[std::size_t(i)][3] = F.neg(b.m[std::size_t(4 + i)]);
  }
  const int rank = rref(F, rows, 4);
  if (rank == 4) return std::nullopt;
  // Back-substitute one kernel vector: find a free column.
  std::array<int, 4> pivot_col{-1, -1, -1, -1};
  std::array<bool, 4> is_pivot{};
  for (int r = 0, c = 0; r < rank; ++r) {
    while (c < 4 && rows[std::size_t(r)][std::size_t(c)] == 0) ++c;
    pivot_col[std::size_t(r)] = c;
    is_pivot[std::size_t(c)] = true;
  }
  int free_col = -1;
  for (int c = 0; c < 4; ++c)
    if (!is_pivot[std::size_t(c)]) { free_col = c; break; }
  std::array<Code, 4> sol{};
  sol[std::size_t(free_col)] = 1;
  for (int r = rank - 1; r >= 0; --r)
    sol[std::size_t(pivot_col[std::size_t(r)])] = F.neg(rows[std::size_t(r)][std::size_t(free_col)]);
  std::array<Code, 5> raw{};
  for (int i = 0; i < 4; ++i)
    raw[std::size_t(i)] = F.add(F.mul(sol[0], a.m[std::size_t(i)]), F.mul(sol[1], a.m[std::size_t(4 + i)]));
  bool zero = true;
  for (Code c : raw)
    if (c != 0) zero = false;
  if (zero) return std::nullopt;  // identical lines
  return normalize_point(F, 3, raw);
}

LineP3 line_frobenius(const FieldCtx& F, const LineP3& L, std::uint64_t qq) {
  // Entry-wise Frobenius preserves RREF shape (pivot 1s and 0s are fixed).
  LineP3 r;
  for (int i = 0; i < 8; ++i) r.m[std::size_t(i)] = F.frobenius(L.m[std::size_t(i)], qq);
  return r;
}

ProjPoint point_frobenius(const FieldCtx& F, const ProjPoint& p, std::uint64_t qq) {
  ProjPoint r;
  r.dim = p.dim;
  for (int i = 0; i <= p.dim; ++i) r.c[std::size_t(i)] = F.frobenius(p.c[std::size_t(i)], qq);
  return r;  // leading 1 is fixed, still canonical
}

bool line_in_subfield(const FieldCtx& F, const LineP3& L, int m) {
  for (Code c : L.m)
    if (!F.in_subfield(c, m)) return false;
  return true;
}

// --- planes -----------------------------------------------------------------

namespace {

PlaneP3 normalize_plane(const FieldCtx& F, std::array<Code, 4> dual) {
  int lead = -1;
  for (int i = 0; i < 4; ++i)
    if (dual[std::size_t(i)] != 0) { lead = i; break; }
  if (lead < 0) throw internal_error("zero covector is not a plane");
  const Code s = F.inv(dual[std::size_t(lead)]);
  PlaneP3 pi;
  for (int i = 0; i < 4; ++i) pi.dual[std::size_t(i)] = F.mul(dual[std::size_t(i)], s);
  return pi;
}

// Kernel (as RREF rows) of a set of covectors in F^cols.
std::vector<std::array<Code, 5>> kernel_rref(const FieldCtx& F,
                                             std::vector<std::array<Code, 5>> rows, int cols) {
  const int rank = rref(F, rows, cols);
  std::vector<int> pivots;
  std::vector<bool> is_pivot(std::size_t(cols), false);
  for (int r = 0, c = 0; r < rank; ++r) {
    while (c < cols && rows[std::size_t(r)][std::size_t(c)] == 0) ++c;
    pivots.push_back(c);
    is_pivot[std::size_t(c)] = true;
  }
  std::vector<std::array<Code, 5>> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[std::size_t(c)]) continue;
    std::array<Code, 5> v{};
    v[std::size_t(c)] = 1;
    for (int r = 0; r < rank; ++r)
      v[std::size_t(pivots[std::size_t(r)])] = F.neg(rows[std::size_t(r)][std::size_t(c)]);
    basis.push_back(v);
  }
  rref(F, basis, cols);  // canonical
  return basis;
}

}  // namespace

PlaneP3 plane_span(const FieldCtx& F, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  std::vector<std::array<Code, 5>> rows{{}, {}, {}};
  for (int i = 0; i < 4; ++i) {
    rows[0][std::size_t(i)] = a.c[std::size_t(i)];
    rows[1][std::size_t(i)] = b.c[std::size_t(i)];
    rows[2][std::size_t(i)] = c.c[std::size_t(i)];
  }
  if (rref(F, rows, 4) != 3) throw input_error("points do not span a plane");
  auto kern = kernel_rref(F, rows, 4);
  std::array<Code, 4> dual{};
  for (int i = 0; i < 4; ++i) dual[std::size_t(i)] = kern[0][std::size_t(i)];
  return normalize_plane(F, dual);
}

PlaneP3 plane_through(const FieldCtx& F, const LineP3& L, const ProjPoint& p) {
  ProjPoint a, b;
  a.dim = b.dim = 3;
  for (int i = 0; i < 4; ++i) {
    a.c[std::size_t(i)] = L.m[std::size_t(i)];
    b.c[std::size_t(i)] = L.m[std::size_t(4 + i)];
  }
  return plane_span(F, a, b, p);
}

bool point_on_plane(const FieldCtx& F, const ProjPoint& p, const PlaneP3& pi) {
  Code acc = 0;
  for (int i = 0; i < 4; ++i) acc = F.add(acc, F.mul(p.c[std::size_t(i)], pi.dual[std::size_t(i)]));
  return acc == 0;
}

bool line_in_plane(const FieldCtx& F, const LineP3& L, const PlaneP3& pi) {
  for (int r = 0; r < 2; ++r) {
    Code acc = 0;
    for (int i = 0; i < 4; ++i)
      acc = F.add(acc, F.mul(L.m[std::size_t(4 * r + i)], pi.dual[std::size_t(i)]));
    if (acc != 0) return false;
  }
  return true;
}

std::pair<std::array<Code, 4>, std::array<Code, 4>> plane_pencil(const FieldCtx& F, const LineP3& L) {
  std::vector<std::array<Code, 5>> rows{{}, {}};
  for (int i = 0; i < 4; ++i) {
    rows[0][std::size_t(i)] = L.m[std::size_t(i)];
    rows[1][std::size_t(i)] = L.m[std::size_t(4 + i)];
  }
  auto kern = kernel_rref(F, rows, 4);
  if (kern.size() != 2) throw internal_error("line does not have a 2-dimensional pencil");
  std::array<Code, 4> a{}, b{};
  for (int i = 0; i < 4; ++i) {
    a[std::size_t(i)] = kern[0][std::size_t(i)];
    b[std::size_t(i)] = kern[1][std::size_t(i)];
  }
  return {a, b};
}

std::vector<ProjPoint> plane_basis(const FieldCtx& F, const PlaneP3& pi) {
  std::vector<std::array<Code, 5>> rows{{}};
  for (int i = 0; i < 4; ++i) rows[0][std::size_t(i)] = pi.dual[std::size_t(i)];
  auto kern = kernel_rref(F, rows, 4);
  std::vector<ProjPoint> basis;
  for (const auto& v : kern) {
    ProjPoint p;
    p.dim = 3;
    for (int i = 0; i < 4; ++i) p.c[std::size_t(i)] = v[std::size_t(i)];
    basis.push_back(p);  // RREF rows are canonical representatives
  }
  return basis;
}

// --- restriction ------------------------------------------------------------

HomForm restrict_to_line(const FieldCtx& F, const HomForm& f, const LineP3& L) {
  std::vector<std::array<Code, 5>> basis(2);
  for (int i = 0; i < 4; ++i) {
    basis[0][std::size_t(i)] = L.m[std::size_t(i)];
    basis[1][std::size_t(i)] = L.m[std::size_t(4 + i)];
  }
  return substitute(F, f, basis);
}

std::pair<HomForm, std::vector<ProjPoint>> restrict_to_plane(const FieldCtx& F, const HomForm& f,
                                                             const PlaneP3& pi) {
  auto basis_pts = plane_basis(F, pi);
  std::vector<std::array<Code, 5>> basis(3);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 4; ++i) basis[std::size_t(j)][std::size_t(i)] = basis_pts[std::size_t(j)].c[std::size_t(i)];
  return {substitute(F, f, basis), std::move(basis_pts)};
}

ProjPoint plane_coordinates(const FieldCtx& F, const ProjPoint& p,
                            const std::vector<ProjPoint>& basis) {
  // Solve [basis^T] y = p.
  std::vector<std::array<Code, 5>> rows(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < int(basis.size()); ++j)
      rows[std::size_t(i)][std::size_t(j)] = basis[std::size_t(j)].c[std::size_t(i)];
    rows[std::size_t(i)][std::size_t(basis.size())] = p.c[std::size_t(i)];
  }
  const int cols = int(basis.size()) + 1;
  const int rank = rref(F, rows, cols);
  // The augmented column must be dependent; read the solution.
  std::array<Code, 5> sol{};
  for (int r = 0, c = 0; r < rank; ++r) {
    while (c < cols && rows[std::size_t(r)][std::size_t(c)] == 0) ++c;
    if (c == cols - 1) throw input_error("point does not lie on the plane");
    sol[std::size_t(c)] = rows[std::size_t(r)][std::size_t(cols - 1)];
  }
  return normalize_point(F, std::uint8_t(basis.size() - 1), sol);
}

// --- conics -----------------------------------------------------------------

namespace {

struct ConicCoeffs {
  // q(Y) = a Y0^2 + b Y1^2 + c Y2^2 + d Y0Y1 + e Y0Y2 + f Y1Y2
  Code a, b, c, d, e, f;
};

ConicCoeffs conic_coeffs(const HomForm& q) {
  const auto& tbl = monomials(3, 2);
  auto at = [&](int e0, int e1, int e2) {
    return q.coeffs[std::size_t(tbl.index({std::uint8_t(e0), std::uint8_t(e1), std::uint8_t(e2), 0, 0}))];
  };
  return {at(2, 0, 0), at(0, 2, 0), at(0, 0, 2), at(1, 1, 0), at(1, 0, 1), at(0, 1, 1)};
}

}  // namespace

int conic_rank(const FieldCtx& F, const HomForm& q) {
  if (q.nvars != 3 || q.degree != 2) throw internal_error("conic_rank expects a ternary quadric");
  if (q.is_zero()) return 0;
  const auto [a, b, c, d, e, f] = conic_coeffs(q);
  if (F.p() == 2) {
    if (d == 0 && e == 0 && f == 0) return 1;  // perfect square: double line
    // Radical point (f, e, d); smooth iff q does not vanish there.
    const Code val = F.add(
        F.add(F.add(F.mul(a, F.sq(f)), F.mul(b, F.sq(e))), F.mul(c, F.sq(d))),
        F.mul(F.mul(d, e), f));
    return val == 0 ? 2 : 3;
  }
  // Odd characteristic: rank of the doubled Gram matrix.
  const Code two = F.from_coeffs({2 % F.p()});
  std::vector<std::array<Code, 5>> m{
      {F.mul(two, a), d, e, 0, 0},
      {d, F.mul(two, b), f, 0, 0},
      {e, f, F.mul(two, c), 0, 0},
  };
  return rref(F, m, 3);
}

std::pair<std::array<Code, 3>, std::array<Code, 3>> plane_line_points(const FieldCtx& F,
                                                                      const std::array<Code, 3>& dual) {
  std::vector<std::array<Code, 5>> rows{{}};
  for (int i = 0; i < 3; ++i) rows[0][std::size_t(i)] = dual[std::size_t(i)];
  auto kern = kernel_rref(F, rows, 3);
  if (kern.size() != 2) throw internal_error("plane line has wrong kernel dimension");
  return {{kern[0][0], kern[0][1], kern[0][2]}, {kern[1][0], kern[1][1], kern[1][2]}};
}

std::optional<std::pair<std::array<Code, 3>, std::array<Code, 3>>> conic_split(
    const FieldCtx& F, const HomForm& q) {
  const int rank = conic_rank(F, q);
  if (rank >= 3 || rank == 0) throw internal_error("conic_split expects a degenerate nonzero conic");
  const auto [a, b, c, d, e, f] = conic_coeffs(q);
  if (rank == 1) {
    std::array<Code, 3> L{};
    if (F.p() == 2) {
      L = {F.sqrt(a).second, F.sqrt(b).second, F.sqrt(c).second};
    } else {
      // Gram matrix has rank 1: q = s * (dual . Y)^2 for a nonzero row.
      const Code two = F.from_coeffs({2 % F.p()});
      std::array<std::array<Code, 3>, 3> m{{{F.mul(two, a), d, e},
                                            {d, F.mul(two, b), f},
                                            {e, f, F.mul(two, c)}}};
      for (const auto& row : m) {
        if (row[0] != 0 || row[1] != 0 || row[2] != 0) { L = row; break; }
      }
    }
    return std::pair{L, L};
  }
  // rank 2: the two lines pass through the singular point v.
  std::array<Code, 3> v{};
  if (F.p() == 2) {
    v = {f, e, d};
  } else {
    const Code two = F.from_coeffs({2 % F.p()});
    std::vector<std::array<Code, 5>> m{
        {F.mul(two, a), d, e, 0, 0},
        {d, F.mul(two, b), f, 0, 0},
        {e, f, F.mul(two, c), 0, 0},
    };
    auto kern = kernel_rref(F, m, 3);
    v = {kern[0][0], kern[0][1], kern[0][2]};
  }
  // Screen line avoiding v: coordinates with v's leading coordinate zero.
  int lead = v[0] != 0 ? 0 : (v[1] != 0 ? 1 : 2);
  const int ia = lead == 0 ? 1 : 0;
  const int ib = lead == 2 ? 1 : 2;
  // Restrict q to the screen span(e_ia, e_ib): binary quadratic in (s, t).
  auto eval3 = [&](Code y0, Code y1, Code y2) {
    const Code ys[3] = {y0, y1, y2};
    return form_eval(F, q, ys);
  };
  std::array<Code, 3> pa{}, pb{};
  pa[std::size_t(ia)] = 1;
  pb[std::size_t(ib)] = 1;
  const Code qa = eval3(pa[0], pa[1], pa[2]);   // s^2 coefficient
  const Code qb = eval3(pb[0], pb[1], pb[2]);   // t^2 coefficient
  const Code qab = F.sub(F.sub(eval3(F.add(pa[0], pb[0]), F.add(pa[1], pb[1]), F.add(pa[2], pb[2])), qa), qb);
  // Roots of qa s^2 + qab s t + qb t^2.
  std::vector<std::pair<Code, Code>> roots_st;
  if (qa == 0) {
    roots_st.emplace_back(1, 0);
    if (qab != 0) roots_st.emplace_back(F.neg(F.div(qb, qab)), 1);
    else if (qb == 0) throw internal_error("conic vanished on the screen line");
  } else {
    ffield::Poly pol;
    pol.c = {qb, qab, qa};
    for (Code r : ffield::distinct_roots(F, pol)) roots_st.emplace_back(r, 1);
  }
  if (roots_st.size() < 2) {
    if (roots_st.size() == 1) {
      // Double root would mean a double line, excluded by rank 2; a single
      // rational root with the conjugate partner irrational cannot happen for
      // a quadratic, so this is the irreducible case.
      return std::nullopt;
    }
    return std::nullopt;  // irreducible over this field
  }
  auto line_from_root = [&](std::pair<Code, Code> st) {
    std::array<Code, 3> w{};
    for (int i = 0; i < 3; ++i)
      w[std::size_t(i)] = F.add(F.mul(st.first, pa[std::size_t(i)]), F.mul(st.second, pb[std::size_t(i)]));
    // Dual covector of the line through v and w: cross product.
    std::array<Code, 3> L{};
    L[0] = F.sub(F.mul(v[1], w[2]), F.mul(v[2], w[1]));
    L[1] = F.sub(F.mul(v[2], w[0]), F.mul(v[0], w[2]));
    L[2] = F.sub(F.mul(v[0], w[1]), F.mul(v[1], w[0]));
    return L;
  };
  return std::pair{line_from_root(roots_st[0]), line_from_root(roots_st[1])};
}

}  // namespace delpezzo::projgeom
