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

#ifndef DELPEZZO_PICARD_HPP
#define DELPEZZO_PICARD_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "delpezzo/lines.hpp"

namespace delpezzo::picard {

// The Picard lattice Z^{1,6} in the basis (L, E1..E6) with intersection form
// diag(1, -1, -1, -1, -1, -1, -1).  The 27 line classes are indexed
//   0..5   E_i
//   6..20  F_ij = L - E_i - E_j   (i < j, lexicographic)
//   21..26 G_i  = 2L - sum_{k != i} E_k
using Vec7 = std::array<std::int64_t, 7>;
using Mat7 = std::array<Vec7, 7>;           // rows
using Perm27 = std::array<std::uint8_t, 27>;

std::int64_t form_pairing(const Vec7& a, const Vec7& b);
const std::array<Vec7, 27>& line_classes();
const std::array<std::string, 27>& line_class_names();
int line_class_index(const Vec7& v);        // -1 if not a line class
Vec7 anticanonical();                        // 3L - sum E_i
// Intersection number of two distinct line classes (0 or 1).
int class_incidence(int i, int j);

// --- the Weyl group ----------------------------------------------------------

struct WeylGroup {
  std::vector<Perm27> elements;   // closure of the generators; 51840 elements
  std::vector<int> generators;    // indices of the six generators
  int index_of(const Perm27& p) const;
};
const WeylGroup& weyl_group();

Perm27 perm_compose(const Perm27& a, const Perm27& b);  // a after b
Perm27 perm_inverse(const Perm27& a);
int perm_order(const Perm27& a);
std::vector<int> perm_cycle_type(const Perm27& a);      // ascending

// Induced matrix on the lattice (via L = F_12 + E_1 + E_2) and its trace.
Mat7 matrix_of_perm(const Perm27& p);
int trace_of_perm(const Perm27& p);
Mat7 mat_mul(const Mat7& a, const Mat7& b);
Mat7 mat_identity();
bool preserves_form(const Mat7& m);
bool fixes_anticanonical(const Mat7& m);

// --- integer linear algebra ---------------------------------------------------

// Smith normal form with transforms: U * M * V = S (diagonal), U and V
// unimodular.  M is dense row-major rows x cols.
struct SnfResult {
  std::vector<std::vector<std::int64_t>> U, S, V;
};
SnfResult smith_normal_form(std::vector<std::vector<std::int64_t>> M);
std::vector<std::int64_t> snf_diagonal(const SnfResult& r);

// --- cohomology ---------------------------------------------------------------

// H^1(<A>, Z^{1,6}) = ker(Norm) / im(A - I) for the cyclic group generated by
// a finite-order lattice isometry A.
struct CohomologyResult {
  std::vector<std::int64_t> invariant_factors;  // > 1, divisibility chain
  std::int64_t order = 1;
  bool operator==(const CohomologyResult&) const = default;
};
CohomologyResult h1_cyclic(const Mat7& A);

// --- conjugacy classes ---------------------------------------------------------

struct ConjClassRecord {
  int order = 1;                 // element order
  int trace = 7;                 // trace on the lattice
  std::vector<int> cycle_type;   // on the 27 classes, ascending
  std::int64_t size = 0;
  CohomologyResult h1;
  Perm27 representative{};       // least element of the class in byte order
};
// The 25 classes, sorted by (order, trace, cycle type, size); the sort is the
// frozen class index of this artifact.
const std::vector<ConjClassRecord>& conjugacy_classes();
// Index of the class containing p.
int class_index_of(const Perm27& p);

// --- surface-side bridges -------------------------------------------------------

// Bijection line index -> class index realizing the incidence dictionary.
std::array<int, 27> schlafli_label(const lines::LineConfiguration& cfg);

// The Frobenius permutation transported to the 27 classes.
Perm27 frobenius_class_perm(const lines::LineConfiguration& cfg, const std::array<int, 27>& label);

int trace_frobenius(const lines::LineConfiguration& cfg, const std::array<int, 27>& label);

struct WeilCheck {
  int k = 1;
  std::int64_t points = 0;
  std::int64_t formula = 0;
  std::int64_t trace_power = 0;
  bool ok = false;
};
WeilCheck weil_check(const cubic::CubicSurface& S, const lines::LineConfiguration& cfg,
                     const std::array<int, 27>& label, int k);

// H^1 of the cyclic group generated by the m-th Frobenius power.
CohomologyResult surface_h1(const lines::LineConfiguration& cfg, const std::array<int, 27>& label,
                            int m);

}  // namespace delpezzo::picard

#endif  // DELPEZZO_PICARD_HPP
