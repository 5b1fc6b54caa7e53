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

#include "delpezzo/cubic.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include "delpezzo/common.hpp"

namespace delpezzo::cubic {

using projgeom::form_eval;
using projgeom::monomials;
using projgeom::zero_form;

CubicSurface::CubicSurface(int p, int r, std::vector<int> gen_poly,
                           std::vector<SurfaceTerm> terms, int cap)
    : p_(p), r_(r), cap_(cap), gen_poly_(std::move(gen_poly)), terms_(std::move(terms)) {
  if (r_ < 1) throw input_error("base degree r must be positive");
  std::int64_t q = 1;
  for (int i = 0; i < r_; ++i) q *= p_;
  if (q > cap_) throw cap_error("base field exceeds the cap");
  q_ = int(q);
  if (gen_poly_.empty()) gen_poly_ = r_ == 1 ? std::vector<int>{0, 1} : std::vector<int>{};
  if (int(gen_poly_.size()) != r_ + 1)
    throw input_error("gen_poly must have degree r = " + std::to_string(r_));
  if (gen_poly_.back() != 1) throw input_error("gen_poly must be monic");
  std::set<std::array<std::uint8_t, 5>> seen;
  bool nonzero = false;
  for (std::size_t idx = 0; idx < terms_.size(); ++idx) {
    const auto& t = terms_[idx];
    int sum = 0;
    for (int i = 0; i < 4; ++i) sum += t.exps[std::size_t(i)];
    if (sum != 3 || t.exps[4] != 0)
      throw input_error("record " + std::to_string(idx) + ": exponent tuple must have length 4 and degree 3");
    if (!seen.insert(t.exps).second)
      throw input_error("record " + std::to_string(idx) + ": duplicate exponent tuple");
    if (int(t.value.size()) > r_)
      throw input_error("record " + std::to_string(idx) + ": coefficient longer than base degree");
    for (int v : t.value) {
      if (v < 0 || v >= p_)
        throw input_error("record " + std::to_string(idx) + ": coefficient entry out of [0, p)");
      nonzero |= v != 0;
    }
  }
  if (!nonzero) throw input_error("the form is identically zero");
  // Validate the base field presentation now (also proves p prime, cap ok).
  FieldCtx::make(p_, r_, cap_);
}

int CubicSurface::max_extension() const {
  int k = 0;
  std::int64_t size = 1;
  while (size * q_ <= cap_) { size *= q_; ++k; }
  return k;
}

const CubicSurface::Analysis& CubicSurface::analysis(int k) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = analyses_.find(k);
  if (it != analyses_.end()) return *it->second;
  auto A = std::make_unique<Analysis>();
  A->k = k;
  A->B = FieldCtx::make(p_, r_ * k, cap_);
  A->base_gen = ffield::embed_generator(gen_poly_, *A->B);
  A->form = zero_form(4, 3);
  const auto& tbl = monomials(4, 3);
  for (const auto& t : terms_) {
    Code c = 0;
    for (std::size_t j = t.value.size(); j-- > 0;)
      c = A->B->add(A->B->mul(c, A->base_gen), Code(t.value[j]));
    A->form.coeffs[std::size_t(tbl.index(t.exps))] = c;
  }
  A->grad = projgeom::partials(*A->B, A->form);
  return *analyses_.emplace(k, std::move(A)).first->second;
}

namespace {

// Decomposition of the quaternary cubic by powers of x3:
// f = D0(x0,x1,x2) + x3 D1 + x3^2 D2 + x3^3 d3.
struct ChartDecomp {
  HomForm d0, d1, d2;
  Code d3 = 0;
};

ChartDecomp chart_decompose(const HomForm& f) {
  ChartDecomp d;
  d.d0 = zero_form(3, 3);
  d.d1 = zero_form(3, 2);
  d.d2 = zero_form(3, 1);
  const auto& tbl = monomials(4, 3);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    const auto& e = tbl.exps[i];
    const std::array<std::uint8_t, 5> base{e[0], e[1], e[2], 0, 0};
    switch (e[3]) {
      case 0: d.d0.coeffs[std::size_t(monomials(3, 3).index(base))] = f.coeffs[i]; break;
      case 1: d.d1.coeffs[std::size_t(monomials(3, 2).index(base))] = f.coeffs[i]; break;
      case 2: d.d2.coeffs[std::size_t(monomials(3, 1).index(base))] = f.coeffs[i]; break;
      default: d.d3 = f.coeffs[i]; break;
    }
  }
  return d;
}

// The i-th point of P^2(F) in the canonical chart order.
void p2_point_by_index(const FieldCtx& F, std::int64_t idx, Code* xyz) {
  const std::int64_t q = F.q();
  if (idx < q * q) {
    xyz[0] = 1;
    xyz[1] = Code(idx / q);
    xyz[2] = Code(idx % q);
  } else if (idx < q * q + q) {
    xyz[0] = 0;
    xyz[1] = 1;
    xyz[2] = Code(idx - q * q);
  } else {
    xyz[0] = 0;
    xyz[1] = 0;
    xyz[2] = 1;
  }
}

}  // namespace

void CubicSurface::for_each_point(int k, const std::function<void(const ProjPoint&)>& fn) const {
  const auto& A = analysis(k);
  const auto& B = *A.B;
  const ChartDecomp dec = chart_decompose(A.form);
  const std::int64_t base_count = projgeom::proj_space_size(2, B.q());
  Code xyz[3];
  for (std::int64_t idx = 0; idx < base_count; ++idx) {
    p2_point_by_index(B, idx, xyz);
    const Code e0 = form_eval(B, dec.d0, xyz);
    const Code e1 = form_eval(B, dec.d1, xyz);
    const Code e2 = form_eval(B, dec.d2, xyz);
    const Code cubic[4] = {e0, e1, e2, dec.d3};
    Code out[4];
    const int cnt = ffield::small_distinct_roots(B, cubic, 3, out);
    ProjPoint pt;
    pt.dim = 3;
    pt.c = {xyz[0], xyz[1], xyz[2], 0, 0};
    if (cnt < 0) {
      for (int z = 0; z < B.q(); ++z) {
        pt.c[3] = Code(z);
        fn(pt);
      }
    } else {
      std::sort(out, out + cnt);
      for (int i = 0; i < cnt; ++i) {
        pt.c[3] = out[i];
        fn(pt);
      }
    }
  }
  if (dec.d3 == 0) {
    ProjPoint top;
    top.dim = 3;
    top.c = {0, 0, 0, 1, 0};
    fn(top);
  }
}

std::int64_t CubicSurface::point_count(int k) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = counts_.find(k);
    if (it != counts_.end()) return it->second;
  }
  const auto& A = analysis(k);
  const auto& B = *A.B;
  const ChartDecomp dec = chart_decompose(A.form);
  const std::int64_t base_count = projgeom::proj_space_size(2, B.q());
  std::atomic<std::int64_t> total{0};
  parallel_chunks(base_count, [&](std::int64_t lo, std::int64_t hi, int) {
    std::int64_t local = 0;
    Code xyz[3], out[4];
    for (std::int64_t idx = lo; idx < hi; ++idx) {
      p2_point_by_index(B, idx, xyz);
      const Code cubic[4] = {form_eval(B, dec.d0, xyz), form_eval(B, dec.d1, xyz),
                             form_eval(B, dec.d2, xyz), dec.d3};
      const int cnt = ffield::small_distinct_roots(B, cubic, 3, out);
      local += cnt < 0 ? B.q() : cnt;
    }
    total += local;
  });
  std::int64_t result = total + (dec.d3 == 0 ? 1 : 0);
  std::lock_guard<std::mutex> lock(mu_);
  counts_[k] = result;
  return result;
}

const std::vector<ProjPoint>& CubicSurface::points(int k) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = point_sets_.find(k);
    if (it != point_sets_.end()) return it->second;
  }
  std::vector<ProjPoint> pts;
  for_each_point(k, [&](const ProjPoint& p) { pts.push_back(p); });
  std::lock_guard<std::mutex> lock(mu_);
  return point_sets_.emplace(k, std::move(pts)).first->second;
}

std::vector<ProjPoint> CubicSurface::singular_points(int k) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = singular_sets_.find(k);
    if (it != singular_sets_.end()) return it->second;
  }
  const auto& A = analysis(k);
  const auto& B = *A.B;
  const ChartDecomp dec = chart_decompose(A.form);
  const std::int64_t base_count = projgeom::proj_space_size(2, B.q());
  auto gradient_zero = [&](const ProjPoint& pt) {
    for (const auto& g : A.grad)
      if (form_eval(B, g, pt) != 0) return false;
    return true;
  };
  const Code two = B.from_coeffs({2 % p_});
  const Code three = B.from_coeffs({3 % p_});
  auto found = parallel_map_merge<ProjPoint>(base_count, [&](std::int64_t idx, std::vector<ProjPoint>& out) {
    Code xyz[3], rts[4];
    p2_point_by_index(B, idx, xyz);
    const Code e0 = form_eval(B, dec.d0, xyz);
    const Code e1 = form_eval(B, dec.d1, xyz);
    const Code e2 = form_eval(B, dec.d2, xyz);
    const Code cubic[4] = {e0, e1, e2, dec.d3};
    const int cnt = ffield::small_distinct_roots(B, cubic, 3, rts);
    ProjPoint pt;
    pt.dim = 3;
    pt.c = {xyz[0], xyz[1], xyz[2], 0, 0};
    if (cnt < 0) {
      for (int z = 0; z < B.q(); ++z) {
        pt.c[3] = Code(z);
        if (gradient_zero(pt)) out.push_back(pt);
      }
      return;
    }
    std::sort(rts, rts + cnt);
    for (int i = 0; i < cnt; ++i) {
      const Code z = rts[i];
      // d/dz of the fiber cubic = f_x3 at the point; only multiple roots of
      // the fiber (or flat fibers) can be singular.
      const Code dz =
          B.add(B.add(B.mul(three, B.mul(dec.d3, B.mul(z, z))), B.mul(two, B.mul(e2, z))), e1);
      if (dz != 0) continue;
      pt.c[3] = z;
      if (gradient_zero(pt)) out.push_back(pt);
    }
  });
  if (dec.d3 == 0) {
    ProjPoint top;
    top.dim = 3;
    top.c = {0, 0, 0, 1, 0};
    if (gradient_zero(top)) found.push_back(top);
  }
  std::lock_guard<std::mutex> lock(mu_);
  return singular_sets_.emplace(k, std::move(found)).first->second;
}

const CubicSurface::SmoothnessReport& CubicSurface::smoothness() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (smooth_) return *smooth_;
  }
  auto rep = std::make_unique<SmoothnessReport>();
  const int kmax = std::min(6, max_extension());
  for (int k = 1; k <= kmax; ++k) {
    rep->scanned_k.push_back(k);
    auto sing = singular_points(k);
    if (!sing.empty()) {
      rep->smooth = false;
      rep->witnesses = std::move(sing);
      rep->witness_k = k;
      break;
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (!smooth_) smooth_ = std::move(rep);
  return *smooth_;
}

PlaneP3 tangent_plane(const CubicSurface::Analysis& A, const ProjPoint& pt) {
  const auto& B = *A.B;
  if (form_eval(B, A.form, pt) != 0) throw input_error("tangent plane at a point off the surface");
  std::array<Code, 4> dual{};
  bool nonzero = false;
  for (int i = 0; i < 4; ++i) {
    dual[std::size_t(i)] = form_eval(B, A.grad[std::size_t(i)], pt);
    nonzero |= dual[std::size_t(i)] != 0;
  }
  if (!nonzero) throw input_error("tangent plane at a singular point");
  // Normalize through plane_span-free path: reuse the covector directly.
  int lead = 0;
  while (dual[std::size_t(lead)] == 0) ++lead;
  const Code inv = B.inv(dual[std::size_t(lead)]);
  PlaneP3 pi;
  for (int i = 0; i < 4; ++i) pi.dual[std::size_t(i)] = B.mul(dual[std::size_t(i)], inv);
  return pi;
}

TangentCubic tangent_cubic(const CubicSurface::Analysis& A, const ProjPoint& pt) {
  const auto& B = *A.B;
  TangentCubic tc;
  tc.plane = tangent_plane(A, pt);
  auto [section, basis] = projgeom::restrict_to_plane(B, A.form, tc.plane);
  tc.section = std::move(section);
  tc.basis = std::move(basis);
  tc.point_in_plane = projgeom::plane_coordinates(B, pt, tc.basis);
  // Contract: the section is singular at the point.
  for (const auto& g : projgeom::partials(B, tc.section))
    if (form_eval(B, g, tc.point_in_plane) != 0)
      throw internal_error("tangent section is not singular at the point of tangency");
  return tc;
}

}  // namespace delpezzo::cubic
