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

#include "delpezzo/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace delpezzo::ffield {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> prime_factors(int m) {
  std::vector<int> out;
  for (int d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

// --- F_p[t] on int vectors (ascending), used before any tables exist -------

using IPoly = std::vector<int>;

IPoly ip_trim(IPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Remainder of a by monic b, coefficients mod p.
IPoly ip_rem(IPoly a, const IPoly& b, int p) {
  const int db = int(b.size()) - 1;
  while (int(a.size()) - 1 >= db) {
    const int lead = a.back();
    if (lead != 0) {
      const int shift = int(a.size()) - 1 - db;
      for (int i = 0; i <= db; ++i) {
        int& c = a[std::size_t(shift + i)];
        c = (c - lead * b[std::size_t(i)]) % p;
        if (c < 0) c += p;
      }
    }
    a.pop_back();
    a = ip_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

bool ip_divides(const IPoly& d, const IPoly& f, int p) {
  return ip_rem(f, d, p).empty();
}

// Lexicographically smallest (low degree first) monic irreducible of degree n
// over F_p, certified by trial division against every monic polynomial of
// degree <= n/2.
IPoly smallest_irreducible(int p, int n) {
  if (n == 1) return {0, 1};  // t
  // Candidate low coefficients (c0..c_{n-1}) in lex order, c0 most significant.
  std::vector<int> c(std::size_t(n), 0);
  // Divisor list: all monic polynomials of degree 1..n/2.
  std::vector<IPoly> divisors;
  for (int d = 1; 2 * d <= n; ++d) {
    std::vector<int> lo(std::size_t(d), 0);
    while (true) {
      IPoly div(lo.begin(), lo.end());
      div.push_back(1);
      divisors.push_back(std::move(div));
      int i = d - 1;
      for (; i >= 0; --i) {
        if (++lo[std::size_t(i)] < p) break;
        lo[std::size_t(i)] = 0;
      }
      if (i < 0) break;
    }
  }
  while (true) {
    IPoly f(c.begin(), c.end());
    f.push_back(1);
    bool irred = true;
    for (const auto& d : divisors) {
      if (ip_divides(d, f, p)) { irred = false; break; }
    }
    if (irred) return f;
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++c[std::size_t(i)] < p) break;
      c[std::size_t(i)] = 0;
    }
    if (i < 0) throw internal_error("no irreducible polynomial found");
  }
}

}  // namespace

// --- FieldCtx ---------------------------------------------------------------

FieldRef FieldCtx::make(int p, int n, int cap) {
  if (!is_prime(p)) throw input_error("p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw input_error("extension degree must be positive");
  std::int64_t q = 1;
  for (int i = 0; i < n; ++i) {
    q *= p;
    if (q > cap)
      throw cap_error("field size " + std::to_string(p) + "^" + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, FieldRef> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find({p, n});
  if (it != registry.end()) return it->second;
  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->n_ = n;
  ctx->q_ = int(q);
  ctx->modulus_ = smallest_irreducible(p, n);
  ctx->build();
  registry[{p, n}] = ctx;
  return ctx;
}

void FieldCtx::build() {
  // Slow coefficient-vector multiply, used only to seed the tables.
  auto decode = [&](Code a) {
    IPoly v(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) { v[std::size_t(i)] = a % p_; a = Code(a / p_); }
    return v;
  };
  auto encode = [&](const IPoly& v) {
    std::int64_t code = 0;
    for (int i = n_ - 1; i >= 0; --i) code = code * p_ + (i < int(v.size()) ? v[std::size_t(i)] : 0);
    return Code(code);
  };
  auto mul_slow = [&](Code a, Code b) {
    IPoly va = decode(a), vb = decode(b);
    IPoly prod(std::size_t(2 * n_ - 1), 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        prod[std::size_t(i + j)] = int((prod[std::size_t(i + j)] + std::int64_t(va[std::size_t(i)]) * vb[std::size_t(j)]) % p_);
    prod = ip_rem(ip_trim(std::move(prod)), modulus_, p_);
    return encode(prod);
  };
  auto pow_slow = [&](Code a, std::int64_t e) {
    Code r = 1;
    while (e > 0) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };

  // Multiplicative generator: smallest code of full order q-1.
  const auto factors = prime_factors(q_ - 1);
  gen_ = 0;
  for (Code g = 1; g < q_; ++g) {
    bool ok = true;
    for (int ell : factors) {
      if (pow_slow(g, (q_ - 1) / ell) == 1) { ok = false; break; }
    }
    if (ok) { gen_ = g; break; }
  }
  if (gen_ == 0 && q_ > 2) throw internal_error("no multiplicative generator found");
  if (q_ == 2) gen_ = 1;

  exp_.assign(std::size_t(2 * (q_ - 1)), 0);
  log_.assign(std::size_t(q_), 0);
  Code cur = 1;
  for (int i = 0; i < q_ - 1; ++i) {
    exp_[std::size_t(i)] = cur;
    exp_[std::size_t(i + q_ - 1)] = cur;
    log_[cur] = std::uint16_t(i);
    cur = mul_slow(cur, gen_);
  }
  if (cur != 1) throw internal_error("generator order mismatch");

  neg_.assign(std::size_t(q_), 0);
  for (int a = 0; a < q_; ++a) {
    IPoly v = decode(Code(a));
    for (auto& x : v) x = (p_ - x) % p_;
    neg_[std::size_t(a)] = encode(v);
  }

  if (p_ == 2) {
    artin_.assign(std::size_t(q_), Code(q_));
    cube1_.assign(std::size_t(3 * q_), 0);
    cube1_n_.assign(std::size_t(q_), 0);
    for (int w = 0; w < q_; ++w) {
      const Code ww = Code(w);
      const Code sq_w = mul(ww, ww);
      const Code as = add(sq_w, ww);
      if (artin_[as] == Code(q_)) artin_[as] = ww;
      const Code cb = add(mul(sq_w, ww), ww);
      cube1_[std::size_t(3 * cb + cube1_n_[cb])] = ww;
      cube1_n_[cb]++;
    }
  }

  if (n_ >= 2) {
    const int h = (n_ + 1) / 2;
    lo_ = 1;
    for (int i = 0; i < h; ++i) lo_ *= p_;
    hi_ = 1;
    for (int i = 0; i < n_ - h; ++i) hi_ *= p_;
    auto digit_add = [&](int a, int b, int width) {
      int out = 0, mult = 1;
      for (int i = 0; i < width; ++i) {
        int s = (a % p_) + (b % p_);
        if (s >= p_) s -= p_;
        out += s * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
      }
      return out;
    };
    add_lo_.assign(std::size_t(lo_) * lo_, 0);
    for (int a = 0; a < lo_; ++a)
      for (int b = 0; b < lo_; ++b)
        add_lo_[std::size_t(a) * lo_ + b] = Code(digit_add(a, b, h));
    add_hi_.assign(std::size_t(hi_) * hi_, 0);
    for (int a = 0; a < hi_; ++a)
      for (int b = 0; b < hi_; ++b)
        add_hi_[std::size_t(a) * hi_ + b] = Code(digit_add(a, b, n_ - h));
  }
}

Code FieldCtx::pow_sqm(Code a, std::uint64_t e) const {
  Code r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Code FieldCtx::pow(Code a, std::int64_t e) const {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw input_error("division by zero in F_" + std::to_string(q_));
  }
  const std::int64_t m = q_ - 1;
  std::int64_t ee = ((std::int64_t(log_[a]) * (e % m)) % m + m) % m;
  return exp_[std::size_t(ee)];
}

Code FieldCtx::exp_of(std::int64_t e) const {
  const std::int64_t m = q_ - 1;
  return exp_[std::size_t(((e % m) + m) % m)];
}

Code FieldCtx::frobenius(Code a, std::uint64_t qq) const {
  std::uint64_t m = qq;
  while (m > 1) {
    if (m % std::uint64_t(p_) != 0)
      throw input_error(std::to_string(qq) + " is not a power of p = " + std::to_string(p_));
    m /= std::uint64_t(p_);
  }
  if (m != 1) throw input_error("invalid Frobenius power");
  if (a == 0) return 0;
  const std::int64_t mod = q_ - 1;
  return exp_[std::size_t((std::int64_t(log_[a]) * std::int64_t(qq % std::uint64_t(mod))) % mod)];
}

bool FieldCtx::in_subfield(Code a, int m) const {
  if (a == 0) return true;
  std::int64_t mod = q_ - 1;
  std::int64_t pm = 1;
  for (int i = 0; i < m; ++i) pm = (pm * p_) % mod;
  return (std::int64_t(log_[a]) * (pm - 1)) % mod == 0;
}

std::pair<bool, Code> FieldCtx::sqrt(Code a) const {
  if (a == 0) return {true, 0};
  if (p_ == 2) return {true, pow(a, q_ / 2)};
  const int e = log_[a];
  if (e % 2 != 0) return {false, 0};
  return {true, exp_[std::size_t(e / 2)]};
}

std::vector<int> FieldCtx::coeffs(Code a) const {
  std::vector<int> v(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) { v[std::size_t(i)] = a % p_; a = Code(a / p_); }
  return v;
}

Code FieldCtx::from_coeffs(const std::vector<int>& c) const {
  if (int(c.size()) > n_) throw input_error("coefficient vector longer than extension degree");
  std::int64_t code = 0;
  for (int i = n_ - 1; i >= 0; --i) {
    int ci = i < int(c.size()) ? c[std::size_t(i)] : 0;
    if (ci < 0 || ci >= p_) throw input_error("coefficient out of range [0, p)");
    code = code * p_ + ci;
  }
  return Code(code);
}

bool FieldCtx::lex_less(Code a, Code b) const {
  for (int i = 0; i < n_; ++i) {
    const int da = a % p_, db = b % p_;
    if (da != db) return da < db;
    a = Code(a / p_);
    b = Code(b / p_);
  }
  return false;
}

std::string FieldCtx::to_string(Code a) const {
  if (n_ == 1) return std::to_string(int(a));
  const auto v = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n_; ++i) {
    if (v[std::size_t(i)] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || v[std::size_t(i)] != 1) os << v[std::size_t(i)];
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

// --- polynomials ------------------------------------------------------------

int degree(const Poly& f) { return int(f.c.size()) - 1; }

Poly poly_trim(Poly f) {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
  return f;
}

Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    Code x = i < a.c.size() ? a.c[i] : Code(0);
    Code y = i < b.c.size() ? b.c[i] : Code(0);
    r.c[i] = F.add(x, y);
  }
  return poly_trim(std::move(r));
}

Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    Code x = i < a.c.size() ? a.c[i] : Code(0);
    Code y = i < b.c.size() ? b.c[i] : Code(0);
    r.c[i] = F.sub(x, y);
  }
  return poly_trim(std::move(r));
}

Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  return poly_trim(std::move(r));
}

Poly poly_scale(const FieldCtx& F, const Poly& a, Code s) {
  if (s == 0) return {};
  Poly r = a;
  for (auto& c : r.c) c = F.mul(c, s);
  return r;
}

std::pair<Poly, Poly> poly_divrem(const FieldCtx& F, const Poly& a, const Poly& b) {
  if (b.c.empty()) throw input_error("polynomial division by zero");
  Poly rem = a, quo;
  const int db = degree(b);
  const Code lead_inv = F.inv(b.c.back());
  if (degree(rem) >= db) quo.c.assign(std::size_t(degree(rem) - db + 1), 0);
  while (degree(rem) >= db) {
    const int sh = degree(rem) - db;
    const Code coef = F.mul(rem.c.back(), lead_inv);
    quo.c[std::size_t(sh)] = coef;
    for (int i = 0; i <= db; ++i)
      rem.c[std::size_t(sh + i)] = F.sub(rem.c[std::size_t(sh + i)], F.mul(coef, b.c[std::size_t(i)]));
    rem = poly_trim(std::move(rem));
  }
  return {poly_trim(std::move(quo)), std::move(rem)};
}

Poly poly_monic(const FieldCtx& F, const Poly& f) {
  if (f.c.empty()) return f;
  return poly_scale(F, f, F.inv(f.c.back()));
}

Poly poly_gcd(const FieldCtx& F, Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.c.empty()) {
    Poly r = poly_divrem(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

Poly poly_derivative(const FieldCtx& F, const Poly& a) {
  Poly r;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    const int m = int(i) % F.p();
    r.c[i - 1] = m == 0 ? Code(0) : F.mul(a.c[i], F.from_coeffs({m}));
  }
  return poly_trim(std::move(r));
}

Code poly_eval(const FieldCtx& F, const Poly& f, Code x) {
  Code acc = 0;
  for (std::size_t i = f.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.c[i]);
  return acc;
}

std::vector<std::pair<Code, int>> roots(const FieldCtx& F, const Poly& f0) {
  Poly f = poly_trim(f0);
  if (f.c.empty()) throw input_error("roots of the zero polynomial");
  std::vector<std::pair<Code, int>> out;
  for (int a = 0; a < F.q(); ++a) {
    if (poly_eval(F, f, Code(a)) != 0) continue;
    // Deflate to count multiplicity.
    int mult = 0;
    Poly g = f;
    while (true) {
      // synthetic division by (t - a)
      Poly quo;
      quo.c.assign(g.c.size() - 1, 0);
      Code carry = 0;
      for (std::size_t i = g.c.size(); i-- > 1;) {
        carry = F.add(g.c[i], F.mul(carry, Code(a)));
        quo.c[i - 1] = carry;
      }
      const Code rem = F.add(g.c[0], F.mul(carry, Code(a)));
      if (rem != 0) break;
      ++mult;
      g = poly_trim(std::move(quo));
      if (g.c.empty()) break;
    }
    out.emplace_back(Code(a), mult);
  }
  return out;
}

namespace {

Poly poly_mulmod(const FieldCtx& F, const Poly& a, const Poly& b, const Poly& m) {
  return poly_divrem(F, poly_mul(F, a, b), m).second;
}

// t^e mod m by square and multiply.
Poly poly_xpow_mod(const FieldCtx& F, std::uint64_t e, const Poly& m) {
  Poly base;
  base.c = {0, 1};
  base = poly_divrem(F, base, m).second;
  Poly r;
  r.c = {1};
  while (e > 0) {
    if (e & 1) r = poly_mulmod(F, r, base, m);
    base = poly_mulmod(F, base, base, m);
    e >>= 1;
  }
  return r;
}

Poly poly_pow_mod(const FieldCtx& F, Poly base, std::uint64_t e, const Poly& m) {
  base = poly_divrem(F, base, m).second;
  Poly r;
  r.c = {1};
  while (e > 0) {
    if (e & 1) r = poly_mulmod(F, r, base, m);
    base = poly_mulmod(F, base, base, m);
    e >>= 1;
  }
  return r;
}

// g: monic, squarefree, splits into distinct linear factors.  Appends roots.
void extract_split_roots(const FieldCtx& F, const Poly& g, std::vector<Code>& out) {
  const int d = degree(g);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(F.neg(g.c[0]));  // monic: t + c0
    return;
  }
  if (F.p() == 2) {
    // Additive (trace) splitting with a deterministic multiplier ladder.
    const int N = F.n();
    for (int j = 1; j < F.q(); ++j) {
      Poly ut;
      ut.c = {0, Code(j)};
      ut = poly_divrem(F, ut, g).second;
      Poly term = ut, acc = ut;
      for (int i = 1; i < N; ++i) {
        term = poly_mulmod(F, term, term, g);
        acc = poly_add(F, acc, term);
      }
      Poly d1 = poly_gcd(F, g, acc);
      if (degree(d1) > 0 && degree(d1) < d) {
        Poly d2 = poly_divrem(F, g, d1).first;
        extract_split_roots(F, d1, out);
        extract_split_roots(F, poly_monic(F, d2), out);
        return;
      }
    }
  } else {
    for (int j = 0; j < F.q(); ++j) {
      Poly shifted;
      shifted.c = {Code(j), 1};  // t + j
      Poly h = poly_pow_mod(F, shifted, std::uint64_t(F.q() - 1) / 2, g);
      h.c.resize(std::max<std::size_t>(h.c.size(), 1), 0);
      h.c[0] = F.sub(h.c[0], 1);
      h = poly_trim(std::move(h));
      Poly d1 = poly_gcd(F, g, h);
      if (degree(d1) > 0 && degree(d1) < d) {
        Poly d2 = poly_divrem(F, g, d1).first;
        extract_split_roots(F, d1, out);
        extract_split_roots(F, poly_monic(F, d2), out);
        return;
      }
    }
  }
  throw internal_error("equal-degree splitting did not terminate");
}

Poly pth_root(const FieldCtx& F, const Poly& f) {
  const int p = F.p();
  Poly r;
  r.c.assign(f.c.size() / std::size_t(p) + 1, 0);
  std::uint64_t e = 1;
  for (int i = 1; i < F.n(); ++i) e *= std::uint64_t(p);  // c^(p^(n-1)) = c^(1/p)
  for (std::size_t i = 0; i * std::size_t(p) < f.c.size(); ++i)
    r.c[i] = F.pow_sqm(f.c[i * std::size_t(p)], e);
  return poly_trim(std::move(r));
}

Poly radical(const FieldCtx& F, Poly f) {
  f = poly_monic(F, poly_trim(std::move(f)));
  Poly one;
  one.c = {1};
  if (degree(f) <= 0) return one;
  Poly fp = poly_derivative(F, f);
  if (fp.c.empty()) return radical(F, pth_root(F, f));
  Poly g = poly_gcd(F, f, fp);
  Poly u = poly_divrem(F, f, g).first;  // distinct factors with exponent != 0 mod p
  Poly rg = radical(F, g);
  // lcm(u, rg)
  Poly common = poly_gcd(F, u, rg);
  return poly_monic(F, poly_mul(F, poly_divrem(F, u, common).first, rg));
}

}  // namespace

std::vector<Code> distinct_roots(const FieldCtx& F, const Poly& f0) {
  Poly f = poly_trim(f0);
  if (f.c.empty()) throw input_error("roots of the zero polynomial");
  std::vector<Code> out;
  // Strip roots at zero.
  std::size_t z = 0;
  while (z < f.c.size() && f.c[z] == 0) ++z;
  if (z > 0) {
    out.push_back(0);
    f.c.erase(f.c.begin(), f.c.begin() + std::ptrdiff_t(z));
  }
  if (degree(f) <= 0) return out;
  if (degree(f) == 1) {
    out.push_back(F.neg(F.div(f.c[0], f.c[1])));
    return out;
  }
  const Poly tq = poly_xpow_mod(F, std::uint64_t(F.q()), f);
  Poly h = tq;
  h.c.resize(std::max<std::size_t>(h.c.size(), 2), 0);
  h.c[1] = F.sub(h.c[1], 1);
  h = poly_trim(std::move(h));
  Poly g = h.c.empty() ? poly_monic(F, f) : poly_gcd(F, f, h);
  extract_split_roots(F, g, out);
  return out;
}

int distinct_root_count_closure(const FieldCtx& F, const Poly& f) {
  Poly t = poly_trim(f);
  if (t.c.empty()) throw input_error("radical of the zero polynomial");
  return degree(radical(F, t));
}

// --- allocation-free small-degree root extraction ---------------------------

namespace {

// Monic quadratic t^2 + a t + b: distinct roots into out, returns count.
int monic_quadratic_roots(const FieldCtx& F, Code a, Code b, Code* out) {
  if (F.p() == 2) {
    if (a == 0) { out[0] = F.sqrt(b).second; return 1; }
    const Code rhs = F.div(b, F.mul(a, a));
    const Code w = F.artin_solve(rhs);
    if (w == Code(F.q())) return 0;
    out[0] = F.mul(a, w);
    out[1] = F.add(out[0], a);
    return 2;
  }
  const Code four = F.from_coeffs({4 % F.p()});
  const Code disc = F.sub(F.mul(a, a), F.mul(four, b));
  auto [ok, s] = F.sqrt(disc);
  if (!ok) return 0;
  const Code inv2 = F.inv(F.from_coeffs({2 % F.p()}));
  out[0] = F.mul(F.sub(s, a), inv2);
  if (s == 0) return 1;
  out[1] = F.mul(F.sub(F.neg(s), a), inv2);
  return 2;
}

// Monic cubic over a char-2 field via the depressed form and table lookup.
int char2_cubic_roots(const FieldCtx& F, Code a, Code b, Code c, Code* out) {
  // z = w + a turns t^3 + a t^2 + b t + c into w^3 + P w + Q.
  const Code P = F.add(F.mul(a, a), b);
  const Code Q = F.add(F.mul(a, b), c);
  int cnt = 0;
  if (P == 0) {
    // w^3 = Q
    if (Q == 0) {
      out[cnt++] = a;
    } else if (F.q() % 3 == 2) {  // gcd(3, q-1) = 1: unique cube root
      const std::int64_t m = F.q() - 1;
      std::int64_t i3 = 0;
      for (std::int64_t k = 0; k < 3; ++k)
        if ((1 + k * m) % 3 == 0) { i3 = (1 + k * m) / 3; break; }
      out[cnt++] = F.add(F.pow(Q, i3), a);
    } else if (F.log(Q) % 3 == 0) {
      const Code r = F.exp_of(F.log(Q) / 3);
      const Code omega = F.exp_of((F.q() - 1) / 3);
      Code w = r;
      for (int i = 0; i < 3; ++i) { out[cnt++] = F.add(w, a); w = F.mul(w, omega); }
    }
    return cnt;
  }
  const Code s = F.sqrt(P).second;
  const Code rhs = F.div(Q, F.mul(F.mul(s, s), s));
  const int k = F.cube1_count(rhs);
  for (int i = 0; i < k; ++i) out[cnt++] = F.add(F.mul(s, F.cube1_root(rhs, i)), a);
  return cnt;
}

// Fixed-size polynomial helpers for the generic gcd-based path.
struct SPoly {
  Code c[9];
  int d;  // degree, -1 for zero
};

void sp_trim(SPoly& f) {
  while (f.d >= 0 && f.c[f.d] == 0) --f.d;
}

// a mod f (f monic-ized in place by the caller), in place.
void sp_rem(const FieldCtx& F, SPoly& a, const SPoly& f) {
  const Code lead_inv = F.inv(f.c[f.d]);
  while (a.d >= f.d && a.d >= 0) {
    const Code coef = F.mul(a.c[a.d], lead_inv);
    const int sh = a.d - f.d;
    for (int i = 0; i <= f.d; ++i) a.c[sh + i] = F.sub(a.c[sh + i], F.mul(coef, f.c[i]));
    sp_trim(a);
  }
}

void sp_mulmod(const FieldCtx& F, const SPoly& a, const SPoly& b, const SPoly& f, SPoly& out) {
  Code prod[9] = {};
  for (int i = 0; i <= a.d; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j <= b.d; ++j)
      prod[i + j] = F.add(prod[i + j], F.mul(a.c[i], b.c[j]));
  }
  out.d = (a.d < 0 || b.d < 0) ? -1 : a.d + b.d;
  for (int i = 0; i <= out.d; ++i) out.c[i] = prod[i];
  sp_trim(out);
  sp_rem(F, out, f);
}

void sp_gcd(const FieldCtx& F, SPoly a, SPoly b, SPoly& out) {
  sp_trim(a);
  sp_trim(b);
  while (b.d >= 0) {
    sp_rem(F, a, b);
    SPoly t = a;
    a = b;
    b = t;
  }
  // monic
  if (a.d >= 0) {
    const Code inv = F.inv(a.c[a.d]);
    for (int i = 0; i <= a.d; ++i) a.c[i] = F.mul(a.c[i], inv);
  }
  out = a;
}

// Splits g (monic, squarefree, product of distinct linear factors).
void sp_extract_roots(const FieldCtx& F, const SPoly& g, Code* out, int& cnt) {
  if (g.d <= 0) return;
  if (g.d == 1) { out[cnt++] = F.neg(g.c[0]); return; }
  if (g.d == 2) {
    cnt += monic_quadratic_roots(F, g.c[1], g.c[0], out + cnt);
    return;
  }
  // Ladder splitting.
  SPoly d1;
  d1.d = -1;
  if (F.p() == 2) {
    for (int j = 1; j < F.q(); ++j) {
      SPoly term;
      term.d = 1;
      term.c[0] = 0;
      term.c[1] = Code(j);
      sp_rem(F, term, g);
      SPoly acc = term;
      for (int i = 1; i < F.n(); ++i) {
        SPoly sqr;
        sp_mulmod(F, term, term, g, sqr);
        term = sqr;
        for (int k = 0; k <= std::max(acc.d, term.d); ++k) {
          const Code x = k <= acc.d ? acc.c[k] : Code(0);
          const Code y = k <= term.d ? term.c[k] : Code(0);
          acc.c[k] = F.add(x, y);
        }
        acc.d = std::max(acc.d, term.d);
        sp_trim(acc);
      }
      sp_gcd(F, g, acc, d1);
      if (d1.d > 0 && d1.d < g.d) break;
      d1.d = -1;
    }
  } else {
    for (int j = 0; j < F.q(); ++j) {
      // (t + j)^((q-1)/2) mod g, minus 1
      SPoly base;
      base.d = 1;
      base.c[0] = Code(j);
      base.c[1] = 1;
      SPoly r;
      r.d = 0;
      r.c[0] = 1;
      std::uint64_t e = std::uint64_t(F.q() - 1) / 2;
      while (e > 0) {
        if (e & 1) { SPoly t2; sp_mulmod(F, r, base, g, t2); r = t2; }
        SPoly b2;
        sp_mulmod(F, base, base, g, b2);
        base = b2;
        e >>= 1;
      }
      if (r.d < 0) { r.d = 0; r.c[0] = 0; }
      r.c[0] = F.sub(r.c[0], 1);
      sp_trim(r);
      sp_gcd(F, g, r, d1);
      if (d1.d > 0 && d1.d < g.d) break;
      d1.d = -1;
    }
  }
  if (d1.d <= 0) throw internal_error("small-root splitting failed");
  // g / d1
  SPoly quo;
  quo.d = g.d - d1.d;
  SPoly rem = g;
  const Code lead_inv = F.inv(d1.c[d1.d]);
  for (int sh = quo.d; sh >= 0; --sh) {
    const Code coef = (rem.d == d1.d + sh) ? F.mul(rem.c[rem.d], lead_inv) : Code(0);
    quo.c[sh] = coef;
    if (coef != 0) {
      for (int i = 0; i <= d1.d; ++i) rem.c[sh + i] = F.sub(rem.c[sh + i], F.mul(coef, d1.c[i]));
      sp_trim(rem);
    }
  }
  sp_extract_roots(F, d1, out, cnt);
  sp_extract_roots(F, quo, out, cnt);
}

}  // namespace

int small_distinct_roots(const FieldCtx& F, const Code* cin, int deg, Code* out) {
  Code c[5];
  int d = -1;
  for (int i = 0; i <= deg && i < 5; ++i) {
    c[i] = cin[i];
    if (c[i] != 0) d = i;
  }
  if (d < 0) return -1;  // zero polynomial
  int cnt = 0;
  if (d == 0) return 0;
  if (d == 1) { out[0] = F.neg(F.div(c[0], c[1])); return 1; }
  if (d == 2) {
    const Code inv = F.inv(c[2]);
    return monic_quadratic_roots(F, F.mul(c[1], inv), F.mul(c[0], inv), out);
  }
  if (d == 3 && F.p() == 2) {
    const Code inv = F.inv(c[3]);
    return char2_cubic_roots(F, F.mul(c[2], inv), F.mul(c[1], inv), F.mul(c[0], inv), out);
  }
  if (F.q() <= 128) {  // tiny fields: a scan beats the machinery
    for (int x = 0; x < F.q(); ++x) {
      Code acc = 0;
      for (int i = d; i >= 0; --i) acc = F.add(F.mul(acc, Code(x)), c[i]);
      if (acc == 0) out[cnt++] = Code(x);
    }
    return cnt;
  }
  // Generic: gcd(t^q - t, f), then split.
  SPoly f;
  f.d = d;
  const Code inv = F.inv(c[d]);
  for (int i = 0; i <= d; ++i) f.c[i] = F.mul(c[i], inv);
  SPoly base;
  base.d = 1;
  base.c[0] = 0;
  base.c[1] = 1;
  SPoly r;
  r.d = 0;
  r.c[0] = 1;
  std::uint64_t e = std::uint64_t(F.q());
  while (e > 0) {
    if (e & 1) { SPoly t2; sp_mulmod(F, r, base, f, t2); r = t2; }
    SPoly b2;
    sp_mulmod(F, base, base, f, b2);
    base = b2;
    e >>= 1;
  }
  // r = t^q mod f; g = gcd(f, r - t)
  Code rc[9] = {};
  for (int i = 0; i <= r.d; ++i) rc[i] = r.c[i];
  rc[1] = F.sub(rc[1], 1);
  SPoly diff;
  diff.d = std::max(r.d, 1);
  for (int i = 0; i <= diff.d; ++i) diff.c[i] = rc[i];
  sp_trim(diff);
  SPoly g;
  if (diff.d < 0) {
    g = f;  // every root of f is rational and f is squarefree enough to split
  } else {
    sp_gcd(F, f, diff, g);
  }
  sp_extract_roots(F, g, out, cnt);
  return cnt;
}

Code embed_generator(const std::vector<int>& def_poly, const FieldCtx& big) {
  Poly f;
  f.c.reserve(def_poly.size());
  for (int c : def_poly) {
    if (c < 0 || c >= big.p()) throw input_error("defining polynomial coefficient out of range");
    f.c.push_back(Code(c));
  }
  f = poly_trim(std::move(f));
  if (f.c.empty()) throw input_error("defining polynomial is zero");
  bool found = false;
  Code best = 0;
  for (int a = 0; a < big.q(); ++a) {
    if (poly_eval(big, f, Code(a)) != 0) continue;
    if (!found || big.lex_less(Code(a), best)) { best = Code(a); found = true; }
  }
  if (!found)
    throw input_error("defining polynomial has no root (degree does not divide " +
                      std::to_string(big.n()) + ")");
  return best;
}

Embedding::Embedding(FieldRef small, FieldRef big, Code anchor_small, Code anchor_big)
    : small_(std::move(small)), big_(std::move(big)) {
  if (small_->p() != big_->p() || big_->n() % small_->n() != 0)
    throw input_error("no embedding: incompatible field degrees");
  // Candidate images of small's generator-of-presentation t: roots of the
  // small modulus inside big, in lex order.
  Poly mod;
  for (int c : small_->modulus()) mod.c.push_back(Code(c));
  std::vector<Code> cands;
  for (int a = 0; a < big_->q(); ++a)
    if (poly_eval(*big_, mod, Code(a)) == 0) cands.push_back(Code(a));
  std::sort(cands.begin(), cands.end(),
            [&](Code x, Code y) { return big_->lex_less(x, y); });
  if (cands.empty()) throw internal_error("modulus has no root in the bigger field");
  auto image_of = [&](Code a, Code rho) {
    auto digits = small_->coeffs(a);
    Code acc = 0;
    for (int i = small_->n() - 1; i >= 0; --i)
      acc = big_->add(big_->mul(acc, rho), Code(digits[std::size_t(i)]));
    return acc;
  };
  Code rho_chosen = cands.front();
  if (!(anchor_small == 0 && anchor_big == 0)) {
    bool ok = false;
    for (Code rho : cands) {
      if (image_of(anchor_small, rho) == anchor_big) { rho_chosen = rho; ok = true; break; }
    }
    if (!ok) throw internal_error("no embedding matches the requested anchor");
  }
  map_.assign(std::size_t(small_->q()), 0);
  for (int a = 0; a < small_->q(); ++a) map_[std::size_t(a)] = image_of(Code(a), rho_chosen);
}

}  // namespace delpezzo::ffield
