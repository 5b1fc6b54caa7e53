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

#ifndef DELPEZZO_FFIELD_HPP
#define DELPEZZO_FFIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "delpezzo/common.hpp"

namespace delpezzo::ffield {

// An element of F_{p^n} is a residue class modulo the field's defining
// polynomial, stored as its coefficient vector packed in base p:
//   code = c0 + c1*p + ... + c_{n-1}*p^{n-1},  0 <= ci < p.
using Code = std::uint16_t;

class FieldCtx;
using FieldRef = std::shared_ptr<const FieldCtx>;

// Explicit model of F_{p^n}.  The defining polynomial is the
// lexicographically smallest (coefficients compared low degree first) monic
// irreducible of degree n over F_p, so a (p, n) pair always produces the
// identical presentation.  Prime fields use n = 1 with modulus t.
//
// Immutable after construction; all operations are const and thread-safe.
class FieldCtx {
 public:
  static constexpr int kDefaultCap = 8192;  // max p^n

  // Shared, cached construction.  Throws input_error for non-prime p,
  // cap_error when p^n exceeds the cap.
  static FieldRef make(int p, int n, int cap = kDefaultCap);

  int p() const { return p_; }
  int n() const { return n_; }
  int q() const { return q_; }                      // p^n
  const std::vector<int>& modulus() const { return modulus_; }

  Code zero() const { return 0; }
  Code one() const { return 1; }
  // A fixed multiplicative generator (smallest code that generates F*).
  Code gen() const { return gen_; }

  Code add(Code a, Code b) const {
    if (n_ == 1) { int s = int(a) + int(b); if (s >= p_) s -= p_; return Code(s); }
    if (p_ == 2) return Code(a ^ b);
    return Code(add_lo_[(a % lo_) * lo_ + (b % lo_)] +
                add_hi_[(a / lo_) * hi_ + (b / lo_)] * lo_);
  }
  Code neg(Code a) const { return neg_[a]; }
  Code sub(Code a, Code b) const { return add(a, neg_[b]); }
  Code mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[std::size_t(log_[a]) + log_[b]];
  }
  Code inv(Code a) const {
    if (a == 0) throw input_error("division by zero in F_" + std::to_string(q_));
    return exp_[std::size_t(q_ - 1) - log_[a]];
  }
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code sq(Code a) const { return mul(a, a); }

  // Exponentiation by square-and-multiply on codes (reference path).
  Code pow_sqm(Code a, std::uint64_t e) const;
  // Table-based exponentiation; e may be any integer for a != 0.
  Code pow(Code a, std::int64_t e) const;

  // x -> x^qq where qq must be a power of p not exceeding q.
  Code frobenius(Code a, std::uint64_t qq) const;
  // True iff a^{p^m} = a, i.e. a lies in the subfield of size p^m.
  bool in_subfield(Code a, int m) const;
  // Square root when one exists.
  std::pair<bool, Code> sqrt(Code a) const;

  int log(Code a) const { return log_[a]; }        // a != 0
  Code exp_of(std::int64_t e) const;               // gen^e, e any integer

  // Char-2 solver tables (empty for odd p): a solution of w^2 + w = c (or q
  // when none), and the packed solutions of y^3 + y = c.
  Code artin_solve(Code c) const { return artin_[c]; }
  int cube1_count(Code c) const { return cube1_n_[c]; }
  Code cube1_root(Code c, int i) const { return cube1_[std::size_t(3 * c + i)]; }

  std::vector<int> coeffs(Code a) const;           // length n, ascending degree
  Code from_coeffs(const std::vector<int>& c) const;
  // Low-degree-first lexicographic comparison of coefficient vectors.
  bool lex_less(Code a, Code b) const;
  std::string to_string(Code a) const;

 private:
  FieldCtx() = default;
  void build();

  int p_ = 0, n_ = 0, q_ = 0;
  std::vector<int> modulus_;
  Code gen_ = 0;
  int lo_ = 1, hi_ = 1;  // digit-group sizes for the split addition tables
  std::vector<Code> exp_;       // size 2(q-1): gen^i
  std::vector<std::uint16_t> log_;  // size q, log_[0] unused
  std::vector<Code> neg_;
  std::vector<Code> add_lo_, add_hi_;
  std::vector<Code> artin_, cube1_;
  std::vector<std::uint8_t> cube1_n_;
};

// ---------------------------------------------------------------------------
// Dense univariate polynomials, coefficients ascending.  The zero polynomial
// has an empty coefficient vector.

struct Poly {
  std::vector<Code> c;
};

int degree(const Poly& f);  // -1 for the zero polynomial
Poly poly_trim(Poly f);
Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_scale(const FieldCtx& F, const Poly& a, Code s);
// Division with remainder by a nonzero divisor.
std::pair<Poly, Poly> poly_divrem(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_gcd(const FieldCtx& F, Poly a, Poly b);  // monic
Poly poly_derivative(const FieldCtx& F, const Poly& a);
Code poly_eval(const FieldCtx& F, const Poly& f, Code x);
Poly poly_monic(const FieldCtx& F, const Poly& f);

// All roots in the field with multiplicities, by exhaustive evaluation over
// the (capped) field followed by deflation.  Throws on the zero polynomial.
std::vector<std::pair<Code, int>> roots(const FieldCtx& F, const Poly& f);

// Distinct roots via gcd(t^q - t, f) and deterministic equal-degree
// splitting.  Agrees with roots() on the support; used in enumeration-heavy
// inner loops.
std::vector<Code> distinct_roots(const FieldCtx& F, const Poly& f);

// The number of distinct roots of f over the algebraic closure
// (degree of the radical), without constructing any extension.
int distinct_root_count_closure(const FieldCtx& F, const Poly& f);

// Distinct roots of c[0] + c[1] t + ... + c[deg] t^deg, deg <= 4, written to
// out (capacity 4); returns the count.  Allocation-free; this is the inner
// loop of all surface enumerations.  Leading zero coefficients are fine.
// Returns -1 when the polynomial is identically zero.
int small_distinct_roots(const FieldCtx& F, const Code* c, int deg, Code* out);

// Canonical root of def_poly (a polynomial over F_p, given by int
// coefficients) in `big`: the root with lexicographically smallest
// coefficient vector.  Throws input_error when no root exists.
Code embed_generator(const std::vector<int>& def_poly, const FieldCtx& big);

// Field embedding small -> big (small.n | big.n over the same p) mapping
// small.gen()'s power basis through a chosen root of small's modulus.  The
// root is chosen so that anchor_small maps to anchor_big (both must be roots
// of one F_p-polynomial, e.g. the canonical images of a base-field
// generator); with anchors 0 the canonical (lex-least) root is used.
class Embedding {
 public:
  Embedding(FieldRef small, FieldRef big, Code anchor_small = 0, Code anchor_big = 0);
  Code operator()(Code a) const { return map_[a]; }
  const FieldCtx& small() const { return *small_; }
  const FieldCtx& big() const { return *big_; }

 private:
  FieldRef small_, big_;
  std::vector<Code> map_;
};

}  // namespace delpezzo::ffield

#endif  // DELPEZZO_FFIELD_HPP
