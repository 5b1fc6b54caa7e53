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

#include "delpezzo/picard.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "delpezzo/common.hpp"

namespace delpezzo::picard {

namespace {

struct PermHash {
  std::size_t operator()(const Perm27& p) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t b : p) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct Lattice {
  std::array<Vec7, 27> classes{};
  std::array<std::string, 27> names{};
  Lattice() {
    int idx = 0;
    for (int i = 0; i < 6; ++i) {
      Vec7 v{};
      v[std::size_t(1 + i)] = 1;
      classes[std::size_t(idx)] = v;
      names[std::size_t(idx)] = "E" + std::to_string(i + 1);
      ++idx;
    }
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        Vec7 v{};
        v[0] = 1;
        v[std::size_t(1 + i)] = -1;
        v[std::size_t(1 + j)] = -1;
        classes[std::size_t(idx)] = v;
        names[std::size_t(idx)] = "F" + std::to_string(i + 1) + std::to_string(j + 1);
        ++idx;
      }
    for (int i = 0; i < 6; ++i) {
      Vec7 v{};
      v[0] = 2;
      for (int k = 0; k < 6; ++k)
        if (k != i) v[std::size_t(1 + k)] = -1;
      classes[std::size_t(idx)] = v;
      names[std::size_t(idx)] = "G" + std::to_string(i + 1);
      ++idx;
    }
  }
};

const Lattice& lattice() {
  static const Lattice L;
  return L;
}

}  // namespace

std::int64_t form_pairing(const Vec7& a, const Vec7& b) {
  std::int64_t s = a[0] * b[0];
  for (int i = 1; i < 7; ++i) s -= a[std::size_t(i)] * b[std::size_t(i)];
  return s;
}

const std::array<Vec7, 27>& line_classes() { return lattice().classes; }
const std::array<std::string, 27>& line_class_names() { return lattice().names; }

int line_class_index(const Vec7& v) {
  const auto& cls = lattice().classes;
  for (int i = 0; i < 27; ++i)
    if (cls[std::size_t(i)] == v) return i;
  return -1;
}

Vec7 anticanonical() { return {3, -1, -1, -1, -1, -1, -1}; }

int class_incidence(int i, int j) {
  return int(form_pairing(lattice().classes[std::size_t(i)], lattice().classes[std::size_t(j)]));
}

Perm27 perm_compose(const Perm27& a, const Perm27& b) {
  Perm27 r;
  for (int i = 0; i < 27; ++i) r[std::size_t(i)] = a[b[std::size_t(i)]];
  return r;
}

Perm27 perm_inverse(const Perm27& a) {
  Perm27 r;
  for (int i = 0; i < 27; ++i) r[a[std::size_t(i)]] = std::uint8_t(i);
  return r;
}

int perm_order(const Perm27& a) {
  int ord = 1;
  for (int c : perm_cycle_type(a)) ord = int(std::lcm(ord, c));
  return ord;
}

std::vector<int> perm_cycle_type(const Perm27& a) {
  std::array<bool, 27> seen{};
  std::vector<int> cycles;
  for (int i = 0; i < 27; ++i) {
    if (seen[std::size_t(i)]) continue;
    int len = 0, j = i;
    while (!seen[std::size_t(j)]) {
      seen[std::size_t(j)] = true;
      ++len;
      j = a[std::size_t(j)];
    }
    cycles.push_back(len);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

Mat7 matrix_of_perm(const Perm27& p) {
  const auto& cls = lattice().classes;
  // Column images: E_j -> class of p(E_j); L = F_12 + E_1 + E_2.
  std::array<Vec7, 7> cols{};
  for (int j = 0; j < 6; ++j) cols[std::size_t(1 + j)] = cls[p[std::size_t(j)]];
  const int f12 = 6;  // F_12 sits first in the F block
  const Vec7& imF12 = cls[p[std::size_t(f12)]];
  for (int i = 0; i < 7; ++i)
    cols[0][std::size_t(i)] =
        imF12[std::size_t(i)] + cols[1][std::size_t(i)] + cols[2][std::size_t(i)];
  Mat7 m{};
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) m[std::size_t(r)][std::size_t(c)] = cols[std::size_t(c)][std::size_t(r)];
  return m;
}

int trace_of_perm(const Perm27& p) {
  const Mat7 m = matrix_of_perm(p);
  std::int64_t t = 0;
  for (int i = 0; i < 7; ++i) t += m[std::size_t(i)][std::size_t(i)];
  return int(t);
}

Mat7 mat_mul(const Mat7& a, const Mat7& b) {
  Mat7 r{};
  for (int i = 0; i < 7; ++i)
    for (int k = 0; k < 7; ++k) {
      const std::int64_t aik = a[std::size_t(i)][std::size_t(k)];
      if (aik == 0) continue;
      for (int j = 0; j < 7; ++j) r[std::size_t(i)][std::size_t(j)] += aik * b[std::size_t(k)][std::size_t(j)];
    }
  return r;
}

Mat7 mat_identity() {
  Mat7 r{};
  for (int i = 0; i < 7; ++i) r[std::size_t(i)][std::size_t(i)] = 1;
  return r;
}

namespace {

Vec7 mat_apply(const Mat7& m, const Vec7& v) {
  Vec7 r{};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) r[std::size_t(i)] += m[std::size_t(i)][std::size_t(j)] * v[std::size_t(j)];
  return r;
}

}  // namespace

bool preserves_form(const Mat7& m) {
  // Columns must pair like the basis: form(M e_i, M e_j) = form(e_i, e_j).
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      Vec7 ei{}, ej{};
      ei[std::size_t(i)] = 1;
      ej[std::size_t(j)] = 1;
      const std::int64_t expect = form_pairing(ei, ej);
      if (form_pairing(mat_apply(m, ei), mat_apply(m, ej)) != expect) return false;
    }
  return true;
}

bool fixes_anticanonical(const Mat7& m) { return mat_apply(m, anticanonical()) == anticanonical(); }

// --- group generation ---------------------------------------------------------

namespace {

Perm27 perm_of_matrix(const Mat7& m) {
  const auto& cls = lattice().classes;
  Perm27 p{};
  for (int i = 0; i < 27; ++i) {
    const int j = line_class_index(mat_apply(m, cls[std::size_t(i)]));
    if (j < 0) throw internal_error("matrix does not permute the line classes");
    p[std::size_t(i)] = std::uint8_t(j);
  }
  return p;
}

struct GroupData {
  WeylGroup g;
  std::unordered_map<Perm27, int, PermHash> index;
};

const GroupData& group_data() {
  static std::once_flag once;
  static GroupData data;
  std::call_once(once, [] {
    std::vector<Perm27> gens;
    // Adjacent transpositions of the index set {1..6}.
    for (int t = 0; t < 5; ++t) {
      Mat7 m = mat_identity();
      m[std::size_t(1 + t)][std::size_t(1 + t)] = 0;
      m[std::size_t(2 + t)][std::size_t(2 + t)] = 0;
      m[std::size_t(1 + t)][std::size_t(2 + t)] = 1;
      m[std::size_t(2 + t)][std::size_t(1 + t)] = 1;
      gens.push_back(perm_of_matrix(m));
    }
    // Reflection in the root L - E1 - E2 - E3: x -> x + (x . r) r.
    {
      const Vec7 r{1, -1, -1, -1, 0, 0, 0};
      Mat7 m{};
      for (int j = 0; j < 7; ++j) {
        Vec7 ej{};
        ej[std::size_t(j)] = 1;
        const std::int64_t c = form_pairing(ej, r);
        for (int i = 0; i < 7; ++i)
          m[std::size_t(i)][std::size_t(j)] = ej[std::size_t(i)] + c * r[std::size_t(i)];
      }
      gens.push_back(perm_of_matrix(m));
    }
    auto& elements = data.g.elements;
    auto& index = data.index;
    Perm27 id;
    for (int i = 0; i < 27; ++i) id[std::size_t(i)] = std::uint8_t(i);
    elements.push_back(id);
    index.emplace(id, 0);
    for (const auto& gp : gens) {
      if (!index.count(gp)) {
        index.emplace(gp, int(elements.size()));
        elements.push_back(gp);
      }
    }
    for (std::size_t head = 0; head < elements.size(); ++head) {
      const Perm27 cur = elements[head];
      for (const auto& gp : gens) {
        const Perm27 nxt = perm_compose(gp, cur);
        if (index.emplace(nxt, int(elements.size())).second) elements.push_back(nxt);
      }
    }
    for (const auto& gp : gens) data.g.generators.push_back(data.index.at(gp));
    if (elements.size() != 51840)
      throw internal_error("Weyl group closure has " + std::to_string(elements.size()) +
                           " elements, expected 51840");
  });
  return data;
}

}  // namespace

const WeylGroup& weyl_group() { return group_data().g; }

int WeylGroup::index_of(const Perm27& p) const {
  const auto& idx = group_data().index;
  auto it = idx.find(p);
  return it == idx.end() ? -1 : it->second;
}

// --- Smith normal form ----------------------------------------------------------

namespace {

using IMat = std::vector<std::vector<std::int64_t>>;

IMat identity_mat(std::size_t n) {
  IMat m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SnfResult smith_normal_form(IMat M) {
  const std::size_t rows = M.size();
  const std::size_t cols = rows == 0 ? 0 : M[0].size();
  SnfResult res;
  res.U = identity_mat(rows);
  res.V = identity_mat(cols);
  auto& U = res.U;
  auto& V = res.V;

  auto row_swap = [&](std::size_t a, std::size_t b) {
    std::swap(M[a], M[b]);
    std::swap(U[a], U[b]);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(M[i][a], M[i][b]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(V[i][a], V[i][b]);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, std::int64_t f) {
    for (std::size_t j = 0; j < cols; ++j) M[dst][j] += f * M[src][j];
    for (std::size_t j = 0; j < rows; ++j) U[dst][j] += f * U[src][j];
  };
  auto col_add = [&](std::size_t dst, std::size_t src, std::int64_t f) {
    for (std::size_t i = 0; i < rows; ++i) M[i][dst] += f * M[i][src];
    for (std::size_t i = 0; i < cols; ++i) V[i][dst] += f * V[i][src];
  };
  auto row_negate = [&](std::size_t a) {
    for (auto& x : M[a]) x = -x;
    for (auto& x : U[a]) x = -x;
  };

  const std::size_t t_max = std::min(rows, cols);
  for (std::size_t t = 0; t < t_max; ++t) {
    // Find the smallest nonzero entry in the remaining block.
    while (true) {
      std::size_t pi = t, pj = t;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const std::int64_t a = std::abs(M[i][j]);
          if (a != 0 && (best == 0 || a < best)) { best = a; pi = i; pj = j; }
        }
      if (best == 0) goto done;
      if (pi != t) row_swap(pi, t);
      if (pj != t) col_swap(pj, t);
      if (M[t][t] < 0) row_negate(t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (M[i][t] % M[t][t] != 0) { row_add(i, t, -(M[i][t] / M[t][t])); clean = false; }
        else if (M[i][t] != 0) row_add(i, t, -(M[i][t] / M[t][t]));
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (M[t][j] % M[t][t] != 0) { col_add(j, t, -(M[t][j] / M[t][t])); clean = false; }
        else if (M[t][j] != 0) col_add(j, t, -(M[t][j] / M[t][t]));
      }
      if (!clean) continue;
      bool zeroed = true;
      for (std::size_t i = t + 1; i < rows; ++i) zeroed &= M[i][t] == 0;
      for (std::size_t j = t + 1; j < cols; ++j) zeroed &= M[t][j] == 0;
      if (!zeroed) continue;
      // Divisibility: M[t][t] must divide every remaining entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (M[i][j] % M[t][t] != 0) {
            row_add(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
  }
done:
  res.S = std::move(M);
  return res;
}

std::vector<std::int64_t> snf_diagonal(const SnfResult& r) {
  std::vector<std::int64_t> d;
  const std::size_t n = std::min(r.S.size(), r.S.empty() ? 0 : r.S[0].size());
  for (std::size_t i = 0; i < n; ++i) d.push_back(r.S[i][i]);
  return d;
}

// --- cohomology -----------------------------------------------------------------

CohomologyResult h1_cyclic(const Mat7& A) {
  // Order of A.
  int n = 1;
  Mat7 p = A;
  const Mat7 id = mat_identity();
  while (p != id) {
    p = mat_mul(p, A);
    ++n;
    if (n > 32) throw internal_error("matrix order exceeds any Weyl element order");
  }
  // Norm = sum of A^i, i = 0..n-1.
  IMat norm(7, std::vector<std::int64_t>(7, 0));
  p = id;
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < 7; ++r)
      for (int c = 0; c < 7; ++c) norm[std::size_t(r)][std::size_t(c)] += p[std::size_t(r)][std::size_t(c)];
    p = mat_mul(p, A);
  }
  // Integral kernel basis of Norm via SNF.
  auto snf = smith_normal_form(norm);
  const auto diag = snf_diagonal(snf);
  std::vector<std::vector<std::int64_t>> kernel;  // columns of V with zero diagonal
  for (std::size_t j = 0; j < 7; ++j) {
    const bool zero = j >= diag.size() || diag[j] == 0;
    if (!zero) continue;
    std::vector<std::int64_t> col(7);
    for (std::size_t i = 0; i < 7; ++i) col[i] = snf.V[i][j];
    kernel.push_back(std::move(col));
  }
  const std::size_t kdim = kernel.size();
  if (kdim == 0) return {{}, 1};
  // Solve K x = b for each column b of (A - I); K is 7 x kdim.
  IMat K(7, std::vector<std::int64_t>(kdim, 0));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < kdim; ++j) K[i][j] = kernel[j][i];
  auto ksnf = smith_normal_form(K);
  const auto kdiag = snf_diagonal(ksnf);
  IMat X(kdim, std::vector<std::int64_t>(7, 0));  // coordinates of im(A - I)
  for (int col = 0; col < 7; ++col) {
    std::vector<std::int64_t> b(7, 0);
    for (int i = 0; i < 7; ++i)
      b[std::size_t(i)] = A[std::size_t(i)][std::size_t(col)] - (i == col ? 1 : 0);
    // y = U b; y_i must be divisible by s_i for i < kdim, zero beyond.
    std::vector<std::int64_t> y(7, 0);
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) y[i] += ksnf.U[i][j] * b[j];
    std::vector<std::int64_t> z(kdim, 0);
    for (std::size_t i = 0; i < 7; ++i) {
      if (i < kdim) {
        if (kdiag[i] == 0 || y[i] % kdiag[i] != 0)
          throw internal_error("im(A - 1) does not lie in ker(Norm)");
        z[i] = y[i] / kdiag[i];
      } else if (y[i] != 0) {
        throw internal_error("im(A - 1) does not lie in ker(Norm)");
      }
    }
    for (std::size_t i = 0; i < kdim; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < kdim; ++j) acc += ksnf.V[i][j] * z[j];
      X[i][std::size_t(col)] = acc;
    }
  }
  auto xsnf = smith_normal_form(X);
  CohomologyResult res;
  res.order = 1;
  for (std::int64_t d : snf_diagonal(xsnf)) {
    if (d == 0) throw internal_error("H^1 quotient is infinite; broken lattice data");
    res.order *= d;
    if (d > 1) res.invariant_factors.push_back(d);
  }
  return res;
}

// --- conjugacy classes ------------------------------------------------------------

namespace {

struct ClassData {
  std::vector<ConjClassRecord> records;
  std::vector<int> class_of;  // element index -> class index (frozen order)
};

const ClassData& class_data() {
  static std::once_flag once;
  static ClassData data;
  std::call_once(once, [] {
    const auto& G = weyl_group();
    const auto& gd = group_data();
    const int n = int(G.elements.size());
    std::vector<int> cls(std::size_t(n), -1);
    std::vector<ConjClassRecord> recs;
    std::vector<int> raw_class_of(std::size_t(n), -1);
    std::vector<Perm27> gen_perms, gen_invs;
    for (int gi : G.generators) {
      gen_perms.push_back(G.elements[std::size_t(gi)]);
      gen_invs.push_back(perm_inverse(G.elements[std::size_t(gi)]));
    }
    for (int start = 0; start < n; ++start) {
      if (raw_class_of[std::size_t(start)] >= 0) continue;
      const int cid = int(recs.size());
      std::vector<int> queue{start};
      raw_class_of[std::size_t(start)] = cid;
      Perm27 least = G.elements[std::size_t(start)];
      std::int64_t size = 0;
      while (!queue.empty()) {
        const int cur = queue.back();
        queue.pop_back();
        ++size;
        const Perm27& p = G.elements[std::size_t(cur)];
        if (p < least) least = p;
        for (std::size_t g = 0; g < gen_perms.size(); ++g) {
          const Perm27 conj = perm_compose(gen_perms[g], perm_compose(p, gen_invs[g]));
          const int idx = gd.index.at(conj);
          if (raw_class_of[std::size_t(idx)] < 0) {
            raw_class_of[std::size_t(idx)] = cid;
            queue.push_back(idx);
          }
        }
      }
      ConjClassRecord rec;
      rec.representative = least;
      rec.order = perm_order(least);
      rec.trace = trace_of_perm(least);
      rec.cycle_type = perm_cycle_type(least);
      rec.size = size;
      rec.h1 = h1_cyclic(matrix_of_perm(least));
      recs.push_back(std::move(rec));
    }
    // Frozen order: (order, trace, cycle type, size); signatures must differ.
    std::vector<int> perm_idx(recs.size());
    std::iota(perm_idx.begin(), perm_idx.end(), 0);
    auto key = [&](int i) {
      return std::tuple{recs[std::size_t(i)].order, recs[std::size_t(i)].trace,
                        recs[std::size_t(i)].cycle_type, recs[std::size_t(i)].size,
                        recs[std::size_t(i)].representative};
    };
    std::sort(perm_idx.begin(), perm_idx.end(), [&](int a, int b) { return key(a) < key(b); });
    std::vector<int> new_of_raw(recs.size());
    for (std::size_t i = 0; i < perm_idx.size(); ++i) new_of_raw[std::size_t(perm_idx[i])] = int(i);
    std::vector<ConjClassRecord> sorted;
    for (int i : perm_idx) sorted.push_back(std::move(recs[std::size_t(i)]));
    data.records = std::move(sorted);
    data.class_of.resize(std::size_t(n));
    for (int e = 0; e < n; ++e) data.class_of[std::size_t(e)] = new_of_raw[std::size_t(raw_class_of[std::size_t(e)])];
  });
  return data;
}

}  // namespace

const std::vector<ConjClassRecord>& conjugacy_classes() { return class_data().records; }

int class_index_of(const Perm27& p) {
  const int idx = weyl_group().index_of(p);
  if (idx < 0) throw input_error("permutation is not a Weyl element");
  return class_data().class_of[std::size_t(idx)];
}

// --- Schläfli labeling ---------------------------------------------------------

std::array<int, 27> schlafli_label(const lines::LineConfiguration& cfg) {
  // Pairwise-skew six of lines in lexicographic order, then forced labels.
  std::array<int, 6> six{};
  std::array<int, 27> label{};
  auto skew = [&](int i, int j) { return cfg.incidence[std::size_t(i)][std::size_t(j)] == 0; };

  std::function<bool(int, int)> try_assign = [&](int depth, int from) -> bool {
    if (depth == 6) {
      label.fill(-1);
      for (int a = 0; a < 6; ++a) label[std::size_t(six[std::size_t(a)])] = a;  // E_{a+1}
      // Remaining lines: meets-pattern against the six.
      std::array<int, 6> g_of{};  // G_i assigned?
      g_of.fill(-1);
      std::array<std::array<int, 6>, 6> f_of{};
      for (auto& row : f_of) row.fill(-1);
      for (int l = 0; l < 27; ++l) {
        if (label[std::size_t(l)] >= 0) continue;
        int meets = 0;
        std::array<bool, 6> hit{};
        for (int a = 0; a < 6; ++a) {
          if (!skew(l, six[std::size_t(a)])) {
            hit[std::size_t(a)] = true;
            ++meets;
          }
        }
        if (meets == 2) {
          int i = -1, j = -1;
          for (int a = 0; a < 6; ++a)
            if (hit[std::size_t(a)]) (i < 0 ? i : j) = a;
          if (f_of[std::size_t(i)][std::size_t(j)] >= 0) return false;
          f_of[std::size_t(i)][std::size_t(j)] = l;
          // F_{i+1, j+1}: find its class index.
          int idx = 6;
          for (int a = 0; a < 6 && idx <= 20; ++a)
            for (int b = a + 1; b < 6; ++b, ++idx)
              if (a == i && b == j) label[std::size_t(l)] = idx;
        } else if (meets == 5) {
          int miss = -1;
          for (int a = 0; a < 6; ++a)
            if (!hit[std::size_t(a)]) miss = a;
          if (g_of[std::size_t(miss)] >= 0) return false;
          g_of[std::size_t(miss)] = l;
          label[std::size_t(l)] = 21 + miss;
        } else {
          return false;
        }
      }
      for (int l = 0; l < 27; ++l)
        if (label[std::size_t(l)] < 0) return false;
      // Full dictionary check.
      for (int i = 0; i < 27; ++i)
        for (int j = i + 1; j < 27; ++j)
          if (int(cfg.incidence[std::size_t(i)][std::size_t(j)]) !=
              class_incidence(label[std::size_t(i)], label[std::size_t(j)]))
            return false;
      return true;
    }
    for (int cand = from; cand < 27; ++cand) {
      bool ok = true;
      for (int a = 0; a < depth && ok; ++a) ok = skew(cand, six[std::size_t(a)]);
      if (!ok) continue;
      six[std::size_t(depth)] = cand;
      if (try_assign(depth + 1, cand + 1)) return true;
    }
    return false;
  };
  if (!try_assign(0, 0)) throw internal_error("no consistent Schläfli labeling exists");
  return label;
}

Perm27 frobenius_class_perm(const lines::LineConfiguration& cfg, const std::array<int, 27>& label) {
  Perm27 p{};
  for (int i = 0; i < 27; ++i)
    p[std::size_t(label[std::size_t(i)])] = std::uint8_t(label[std::size_t(cfg.frobenius_perm[std::size_t(i)])]);
  return p;
}

int trace_frobenius(const lines::LineConfiguration& cfg, const std::array<int, 27>& label) {
  return trace_of_perm(frobenius_class_perm(cfg, label));
}

WeilCheck weil_check(const cubic::CubicSurface& S, const lines::LineConfiguration& cfg,
                     const std::array<int, 27>& label, int k) {
  WeilCheck out;
  out.k = k;
  out.points = S.point_count(k);
  const Mat7 M = matrix_of_perm(frobenius_class_perm(cfg, label));
  Mat7 P = mat_identity();
  for (int i = 0; i < k; ++i) P = mat_mul(P, M);
  std::int64_t tr = 0;
  for (int i = 0; i < 7; ++i) tr += P[std::size_t(i)][std::size_t(i)];
  out.trace_power = tr;
  std::int64_t qk = 1;
  for (int i = 0; i < k; ++i) qk *= S.q();
  out.formula = qk * qk + qk * tr + 1;
  out.ok = out.points == out.formula;
  return out;
}

CohomologyResult surface_h1(const lines::LineConfiguration& cfg, const std::array<int, 27>& label,
                            int m) {
  const Mat7 M = matrix_of_perm(frobenius_class_perm(cfg, label));
  Mat7 P = mat_identity();
  for (int i = 0; i < m; ++i) P = mat_mul(P, M);
  return h1_cyclic(P);
}

}  // namespace delpezzo::picard
