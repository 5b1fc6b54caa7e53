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

#ifndef DELPEZZO_LINES_HPP
#define DELPEZZO_LINES_HPP

#include <array>
#include <vector>

#include "delpezzo/cubic.hpp"

namespace delpezzo::lines {

using cubic::CubicSurface;
using ffield::Code;
using ffield::FieldRef;
using projgeom::LineP3;
using projgeom::ProjPoint;

struct LineOnSurface {
  LineP3 line;
  int min_degree = 0;  // smallest d with the line defined over F_{q^d}
};

struct EckardtPoint {
  ProjPoint point;
  std::array<int, 3> line_indices{};  // sorted
};

// The 27 lines over the splitting field F_{q^K}, in the canonical order
// (min_degree, then RREF entries in field-element lexicographic order).
struct LineConfiguration {
  FieldRef B;
  int K = 0;  // splitting degree: smallest k with every line defined over F_{q^k}
  std::vector<LineOnSurface> lines;
  std::array<std::array<std::uint8_t, 27>, 27> incidence{};
  std::array<int, 27> frobenius_perm{};
  std::vector<EckardtPoint> eckardt;

  int line_index(const LineP3& L) const;  // -1 if absent
  // Orbits of the Frobenius permutation, each sorted, ordered by least member.
  std::vector<std::vector<int>> frobenius_orbits() const;
  std::vector<int> incidence_row_sums() const;
  std::vector<int> frobenius_cycle_type() const;  // sorted ascending
};

// Finds the 27 lines: tangent-pencil search over surface points at the
// possible minimal orbit degrees, then completion by expanding tritangent
// planes through known lines over candidate splitting fields.
LineConfiguration find_lines(const CubicSurface& S);

// The lines through surface points of S(F_{q^k}) found by the tangent-pencil
// test, deduplicated, in the analysis field of level k.
std::vector<LineP3> lines_visible_at_level(const CubicSurface& S, int k);

// Brute-force cross-check oracle: every line of P^3(F_{q^k}) tested for
// containment.  Only enabled when q^k <= 64.
std::vector<LineP3> all_lines_on_surface_bruteforce(const CubicSurface& S, int k);

bool has_rational_line(const LineConfiguration& cfg);

struct MinimalityResult {
  bool minimal = true;
  std::vector<int> witness;  // line indices of a Galois-stable pairwise-skew orbit
};
MinimalityResult is_minimal(const LineConfiguration& cfg);

// Splits S(F_{q^k}) into points on/off the 27 lines.  Needs lcm(k, K) within
// the cap (the configuration is re-embedded when k does not divide K).
struct LocusSplit {
  std::int64_t on_lines = 0;
  std::int64_t off_lines = 0;
  std::vector<ProjPoint> off_points;  // in the common field
};
LocusSplit points_on_exceptional_locus(const CubicSurface& S, const LineConfiguration& cfg, int k);

// The same configuration inside F_{q^M} (K | M), lines re-embedded through
// the base-anchored field embedding.
LineConfiguration embed_configuration(const CubicSurface& S, const LineConfiguration& cfg, int M);

}  // namespace delpezzo::lines

#endif  // DELPEZZO_LINES_HPP
