#pragma once

// Independent reference computations for the tests. Everything here works on
// plain nested vectors and raw loops, without the library's elimination,
// expansion or search code.

#include "liex/rational.hpp"
#include "liex/structure_tensor.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using liex::Rational;
using Dense = std::vector<std::vector<Rational>>;
// c[i][j][k] = C_ij^k
using Tensor = std::vector<std::vector<std::vector<Rational>>>;

inline Tensor zero_tensor(int n) {
  return Tensor(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
}

// 1-based relation list [e_i, e_j] = sum coeff e_k, antisymmetric completion.
struct Rel {
  int i, j, k;
  Rational coeff;
};

inline Tensor from_relations(int n, const std::vector<Rel>& rels) {
  Tensor t = zero_tensor(n);
  for (const auto& r : rels) {
    t[r.i - 1][r.j - 1][r.k - 1] += r.coeff;
    t[r.j - 1][r.i - 1][r.k - 1] -= r.coeff;
  }
  return t;
}

inline Tensor to_oracle(const liex::StructureTensorQ& c) {
  const int n = static_cast<int>(c.dim());
  Tensor t = zero_tensor(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t[i][j][k] = c(i, j, k);
  return t;
}

inline std::vector<Rational> bracket(const Tensor& t, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const size_t n = t.size();
  std::vector<Rational> out(n, Rational(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * t[i][j][k];
  return out;
}

inline bool jacobi_holds(const Tensor& t) {
  const size_t n = t.size();
  auto e = [n](size_t i) {
    std::vector<Rational> v(n, Rational(0));
    v[i] = 1;
    return v;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        auto a = bracket(t, e(i), bracket(t, e(j), e(k)));
        auto b = bracket(t, e(j), bracket(t, e(k), e(i)));
        auto c = bracket(t, e(k), bracket(t, e(i), e(j)));
        for (size_t r = 0; r < n; ++r)
          if (a[r] + b[r] + c[r] != 0) return false;
      }
  return true;
}

// Flat index i * N + alpha, product from a 0-based cell table.
inline Tensor expand(const std::vector<int>& cells, int order, const Tensor& g) {
  const int n = static_cast<int>(g.size());
  Tensor t = zero_tensor(n * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            t[i * order + a][j * order + b][k * order + cells[a * order + b]] += g[i][j][k];
  return t;
}

inline Rational trace_ad(const Tensor& t, size_t i) {
  Rational s = 0;
  for (size_t j = 0; j < t.size(); ++j) s += t[i][j][j];
  return s;
}

inline int rank(Dense m) {
  int r = 0;
  const size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (size_t q = 0; q < m.size(); ++q) {
      if (q == static_cast<size_t>(r) || m[q][c] == 0) continue;
      const Rational f = m[q][c] / m[r][c];
      for (size_t x = c; x < cols; ++x) m[q][x] -= f * m[r][x];
    }
    ++r;
  }
  return r;
}

// Same span iff rank(A) == rank(B) == rank(A;B).
inline bool same_span(const Dense& a, const Dense& b) {
  Dense ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  const int r = rank(ab);
  return rank(a) == r && rank(b) == r;
}

inline Dense derived_rows(const Tensor& t) {
  Dense rows;
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = i + 1; j < t.size(); ++j) rows.push_back(t[i][j]);
  return rows;
}

inline Dense inverse(Dense m) {
  const size_t n = m.size();
  Dense inv(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Rational d = m[c][c];
    for (size_t x = 0; x < n; ++x) {
      m[c][x] /= d;
      inv[c][x] /= d;
    }
    for (size_t q = 0; q < n; ++q) {
      if (q == c || m[q][c] == 0) continue;
      const Rational f = m[q][c];
      for (size_t x = 0; x < n; ++x) {
        m[q][x] -= f * m[c][x];
        inv[q][x] -= f * inv[c][x];
      }
    }
  }
  return inv;
}

// Rows of u are the new basis vectors.
inline Tensor change_basis(const Tensor& t, const Dense& u) {
  const size_t n = t.size();
  const Dense w = inverse(u);
  Tensor out = zero_tensor(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      auto v = bracket(t, u[i], u[j]);
      for (size_t k = 0; k < n; ++k)
        for (size_t r = 0; r < n; ++r) out[i][j][k] += v[r] * w[r][k];
    }
  return out;
}

// All commutative associative tables of one order, by exhaustive listing.
inline std::vector<std::vector<int>> all_semigroups(int order) {
  std::vector<std::vector<int>> out;
  const int cells = order * order;
  std::vector<int> t(cells, 0);
  long total = 1;
  for (int i = 0; i < cells; ++i) total *= order;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < cells; ++i) {
      t[i] = static_cast<int>(c % order);
      c /= order;
    }
    bool ok = true;
    for (int a = 0; a < order && ok; ++a)
      for (int b = 0; b < order && ok; ++b) {
        if (t[a * order + b] != t[b * order + a]) ok = false;
        for (int d = 0; d < order && ok; ++d)
          if (t[t[a * order + b] * order + d] != t[a * order + t[b * order + d]]) ok = false;
      }
    if (ok) out.push_back(t);
  }
  return out;
}

inline std::vector<int> relabel(const std::vector<int>& t, int order, const std::vector<int>& perm) {
  std::vector<int> out(t.size());
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) out[perm[a] * order + perm[b]] = perm[t[a * order + b]];
  return out;
}

inline int isomorphism_classes(const std::vector<std::vector<int>>& tables, int order) {
  std::set<std::vector<int>> reps;
  for (const auto& t : tables) {
    std::vector<int> perm(order);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best = t;
    do {
      best = std::min(best, relabel(t, order, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    reps.insert(best);
  }
  return static_cast<int>(reps.size());
}

}  // namespace oracle
