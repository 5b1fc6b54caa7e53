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

#ifndef DELPEZZO_PROJGEOM_HPP
#define DELPEZZO_PROJGEOM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "delpezzo/ffield.hpp"

namespace delpezzo::projgeom {

using ffield::Code;
using ffield::FieldCtx;
using ffield::FieldRef;

// Point of P^{dim}, dim in 1..4.  Canonical representative: first nonzero
// coordinate equals 1.
struct ProjPoint {
  std::uint8_t dim = 0;                    // projective dimension
  std::array<Code, 5> c{};                 // coordinates, entries beyond dim+1 zero

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

ProjPoint make_point(const FieldCtx& F, std::initializer_list<int> coords);
ProjPoint normalize_point(const FieldCtx& F, std::uint8_t dim, const std::array<Code, 5>& raw);

// Line in P^3 as its canonical reduced-row-echelon 2x4 basis.
struct LineP3 {
  std::array<Code, 8> m{};  // rows r0 = m[0..3], r1 = m[4..7]

  friend bool operator==(const LineP3&, const LineP3&) = default;
  friend auto operator<=>(const LineP3&, const LineP3&) = default;
};

// Plane in P^3 as a normalized dual covector (first nonzero entry 1).
struct PlaneP3 {
  std::array<Code, 4> dual{};

  friend bool operator==(const PlaneP3&, const PlaneP3&) = default;
  friend auto operator<=>(const PlaneP3&, const PlaneP3&) = default;
};

// Dense homogeneous form in `nvars` variables of degree `degree`.
// Coefficients follow the frozen monomial order: exponent tuples sorted
// lexicographically descending.
struct HomForm {
  std::uint8_t nvars = 0;
  std::uint8_t degree = 0;
  std::vector<Code> coeffs;

  bool is_zero() const {
    for (Code c : coeffs)
      if (c != 0) return false;
    return true;
  }
  friend bool operator==(const HomForm&, const HomForm&) = default;
};

// Frozen monomial order for (nvars, degree); cached.
struct MonomialTable {
  std::vector<std::array<std::uint8_t, 5>> exps;  // descending lex
  int index(const std::array<std::uint8_t, 5>& e) const;  // -1 if absent
};
const MonomialTable& monomials(int nvars, int degree);

HomForm zero_form(int nvars, int degree);
HomForm form_add(const FieldCtx& F, const HomForm& a, const HomForm& b);
HomForm form_scale(const FieldCtx& F, const HomForm& a, Code s);
HomForm form_mul(const FieldCtx& F, const HomForm& a, const HomForm& b);
Code form_eval(const FieldCtx& F, const HomForm& f, const Code* x);
Code form_eval(const FieldCtx& F, const HomForm& f, const ProjPoint& pt);

// Formal partial derivatives, exponents folded into coefficients mod p.
std::vector<HomForm> partials(const FieldCtx& F, const HomForm& f);

// f composed with the linear map sending new variable j to `basis[j]`;
// result is a form in basis.size() variables of the same degree.
HomForm substitute(const FieldCtx& F, const HomForm& f,
                   const std::vector<std::array<Code, 5>>& basis);

// --- enumeration ------------------------------------------------------------

// All (q^{dim+1}-1)/(q-1) canonical points of P^dim in a fixed deterministic
// order.  Throws cap_error when the count exceeds max_count.
std::vector<ProjPoint> enum_points(int dim, const FieldCtx& F,
                                   std::int64_t max_count = std::int64_t(1) << 26);
std::int64_t proj_space_size(int dim, int q);

// --- lines and planes -------------------------------------------------------

LineP3 line_through(const FieldCtx& F, const ProjPoint& a, const ProjPoint& b);
std::vector<ProjPoint> points_on_line(const FieldCtx& F, const LineP3& L);
bool point_on_line(const FieldCtx& F, const ProjPoint& p, const LineP3& L);
// 1 iff the two distinct lines intersect in P^3.
int incidence(const FieldCtx& F, const LineP3& a, const LineP3& b);
std::optional<ProjPoint> line_intersection(const FieldCtx& F, const LineP3& a, const LineP3& b);
// Image of the line under coordinate-wise x -> x^qq.
LineP3 line_frobenius(const FieldCtx& F, const LineP3& L, std::uint64_t qq);
ProjPoint point_frobenius(const FieldCtx& F, const ProjPoint& p, std::uint64_t qq);
// True iff every basis entry lies in the subfield of size p^m.
bool line_in_subfield(const FieldCtx& F, const LineP3& L, int m);

PlaneP3 plane_span(const FieldCtx& F, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
PlaneP3 plane_through(const FieldCtx& F, const LineP3& L, const ProjPoint& p);
bool point_on_plane(const FieldCtx& F, const ProjPoint& p, const PlaneP3& pi);
bool line_in_plane(const FieldCtx& F, const LineP3& L, const PlaneP3& pi);
// Dual basis of the pencil of planes through L (two covectors).
std::pair<std::array<Code, 4>, std::array<Code, 4>> plane_pencil(const FieldCtx& F, const LineP3& L);
// Canonical basis (three points, RREF of the solution space) of a plane.
std::vector<ProjPoint> plane_basis(const FieldCtx& F, const PlaneP3& pi);

// --- restriction ------------------------------------------------------------

// Form on the line: binary form b(s, t) with b(s, t) = f(s r0 + t r1).
HomForm restrict_to_line(const FieldCtx& F, const HomForm& f, const LineP3& L);
// Form on the plane in its canonical basis; second member is the basis used.
std::pair<HomForm, std::vector<ProjPoint>> restrict_to_plane(const FieldCtx& F, const HomForm& f,
                                                             const PlaneP3& pi);
// Plane coordinates of a point lying on the plane, w.r.t. a point basis.
ProjPoint plane_coordinates(const FieldCtx& F, const ProjPoint& p,
                            const std::vector<ProjPoint>& basis);

// --- conics (ternary quadrics) ----------------------------------------------

// 3 = smooth, 2 = two distinct lines, 1 = double line.  Characteristic-aware.
int conic_rank(const FieldCtx& F, const HomForm& conic);

// Splits a degenerate conic into two lines (dual covectors in the plane
// coordinates); equal covectors for a double line.  Returns nullopt when the
// component lines are only defined over a quadratic extension.
std::optional<std::pair<std::array<Code, 3>, std::array<Code, 3>>> conic_split(
    const FieldCtx& F, const HomForm& conic);

// Two distinct points on a plane line given by a dual covector.
std::pair<std::array<Code, 3>, std::array<Code, 3>> plane_line_points(const FieldCtx& F,
                                                                      const std::array<Code, 3>& dual);

// --- generic small RREF -----------------------------------------------------

// Row-reduces in place to canonical RREF; returns the rank.
int rref(const FieldCtx& F, std::vector<std::array<Code, 5>>& rows, int cols);

}  // namespace delpezzo::projgeom

#endif  // DELPEZZO_PROJGEOM_HPP
