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

#ifndef DELPEZZO_CUBIC_HPP
#define DELPEZZO_CUBIC_HPP

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "delpezzo/projgeom.hpp"

namespace delpezzo::cubic {

using ffield::Code;
using ffield::FieldCtx;
using ffield::FieldRef;
using projgeom::HomForm;
using projgeom::LineP3;
using projgeom::PlaneP3;
using projgeom::ProjPoint;

// One sparse monomial of a surface equation: exponent tuple plus the
// coefficient written in the base-field generator (ascending, length <= r).
struct SurfaceTerm {
  std::array<std::uint8_t, 5> exps{};
  std::vector<int> value;
};

// Homogeneous cubic in 4 variables over F_q, q = p^r.  The base field is
// presented by gen_poly (a monic irreducible of degree r over F_p); all
// analysis happens inside one big field F_{q^k} per extension degree, with
// the coefficients re-embedded canonically.
class CubicSurface {
 public:
  CubicSurface(int p, int r, std::vector<int> gen_poly, std::vector<SurfaceTerm> terms,
               int cap = FieldCtx::kDefaultCap);

  int p() const { return p_; }
  int r() const { return r_; }
  int q() const { return q_; }
  int cap() const { return cap_; }
  const std::vector<int>& gen_poly() const { return gen_poly_; }
  const std::vector<SurfaceTerm>& terms() const { return terms_; }

  // Working data over F_{q^k}.
  struct Analysis {
    FieldRef B;                    // F_{p^{r k}}
    int k = 1;                     // extension degree over the base field
    Code base_gen = 0;             // canonical image of the base generator
    HomForm form;                  // the cubic over B
    std::vector<HomForm> grad;     // the four partials
  };
  const Analysis& analysis(int k) const;  // cached; throws cap_error past the cap
  int max_extension() const;              // largest k with q^k <= cap

  // Streaming enumeration of S(F_{q^k}), canonical chart order.
  void for_each_point(int k, const std::function<void(const ProjPoint&)>& fn) const;
  std::int64_t point_count(int k) const;                 // cached
  const std::vector<ProjPoint>& points(int k) const;     // cached, small k only
  std::vector<ProjPoint> singular_points(int k) const;   // cached

  // Smoothness scan over k = 1..min(6, max_extension()); remembers the result.
  // Returns the list of scanned degrees; throws nothing (query verdict below).
  struct SmoothnessReport {
    bool smooth = true;
    std::vector<int> scanned_k;
    std::vector<ProjPoint> witnesses;  // singular points found (analysis field of their k)
    int witness_k = 0;
  };
  const SmoothnessReport& smoothness() const;

 private:
  int p_, r_, q_, cap_;
  std::vector<int> gen_poly_;
  std::vector<SurfaceTerm> terms_;

  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<Analysis>> analyses_;
  mutable std::map<int, std::int64_t> counts_;
  mutable std::map<int, std::vector<ProjPoint>> point_sets_;
  mutable std::map<int, std::vector<ProjPoint>> singular_sets_;
  mutable std::unique_ptr<SmoothnessReport> smooth_;
};

// Tangent plane at a smooth surface point (gradient covector).
PlaneP3 tangent_plane(const CubicSurface::Analysis& A, const ProjPoint& pt);

// The tangent-plane section: a ternary cubic in the plane's canonical basis,
// together with the basis and the plane coordinates of the point.  The
// section is singular at the point.
struct TangentCubic {
  HomForm section;                    // ternary cubic
  std::vector<ProjPoint> basis;       // canonical plane basis in P^3
  ProjPoint point_in_plane;           // coordinates of pt in that basis
  PlaneP3 plane;
};
TangentCubic tangent_cubic(const CubicSurface::Analysis& A, const ProjPoint& pt);

// Evaluates the surface form at a point of the analysis field.
inline Code eval_form(const CubicSurface::Analysis& A, const ProjPoint& pt) {
  return projgeom::form_eval(*A.B, A.form, pt);
}

}  // namespace delpezzo::cubic

#endif  // DELPEZZO_CUBIC_HPP
