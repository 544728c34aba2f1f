#include "liex/conic.hpp"

#include "liex/liealg.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace liex {

namespace {

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (Integer c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    while (d == 1) {
      x = mod_pos(x * x + c, n);
      y = mod_pos(y * y + c, n);
      y = mod_pos(y * y + c, n);
      d = gcd(Integer(abs(Integer(x - y))), n);
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
  for (unsigned p = 2; p < 1000 && Integer(p) * p <= n; ++p) {
    while (n % p == 0) {
      n /= p;
      ++out[Integer(p)];
    }
  }
  if (n == 1) return;
  if (boost::multiprecision::miller_rabin_test(n, 25)) {
    ++out[n];
    return;
  }
  const Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::map<Integer, int> factor(const Integer& n) {
  std::map<Integer, int> out;
  factor_into(abs(n), out);
  return out;
}

}  // namespace

std::array<Integer, 2> squarefree_decompose(const Integer& n) {
  Integer free = 1, root = 1;
  for (const auto& [p, count] : factor(n)) {
    for (int e = 0; e < count / 2; ++e) root *= p;
    if (count % 2) free *= p;
  }
  return {n < 0 ? Integer(-free) : free, root};
}

namespace {

// Tonelli-Shanks for prime p.
std::optional<Integer> sqrt_mod_prime(const Integer& a, const Integer& p) {
  using boost::multiprecision::powm;
  const Integer r = mod_pos(a, p);
  if (r == 0 || p == 2) return r;
  if (powm(r, (p - 1) / 2, p) != 1) return std::nullopt;
  Integer q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (powm(z, (p - 1) / 2, p) != p - 1) ++z;
  Integer c = powm(z, q, p), t = powm(r, q, p), x = powm(r, (q + 1) / 2, p);
  int m = s;
  while (t != 1) {
    int i = 0;
    for (Integer t2 = t; t2 != 1; t2 = t2 * t2 % p) ++i;
    Integer b = c;
    for (int e = 0; e < m - i - 1; ++e) b = b * b % p;
    x = x * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return x;
}

// t with t^2 = a (mod |b|) for squarefree b, 0 <= t <= |b|/2.
std::optional<Integer> sqrt_mod(const Integer& a, const Integer& b) {
  const Integer m = abs(b);
  Integer t = 0, modulus = 1;
  for (const auto& [p, count] : factor(m)) {
    if (count > 1) return std::nullopt;
    const auto root = sqrt_mod_prime(a, p);
    if (!root) return std::nullopt;
    Integer inv;
    mpz_invert(inv.backend().data(), Integer(modulus % p).backend().data(), p.backend().data());
    t += modulus * mod_pos((*root - t) * inv, p);
    modulus *= p;
  }
  t = mod_pos(t, m);
  return t * 2 > m ? Integer(m - t) : t;
}

}  // namespace

std::optional<std::array<Rational, 3>> solve_legendre(const Integer& a, const Integer& b) {
  if (a < 0 && b < 0) return std::nullopt;
  if (a == 1) return std::array<Rational, 3>{1, 0, 1};
  if (b == 1) return std::array<Rational, 3>{0, 1, 1};
  if (a + b == 0) return std::array<Rational, 3>{1, 1, 0};
  if (abs(a) > abs(b)) {
    auto swapped = solve_legendre(b, a);
    if (!swapped) return std::nullopt;
    return std::array<Rational, 3>{(*swapped)[1], (*swapped)[0], (*swapped)[2]};
  }
  // |b| >= 2 here. Norm form: z^2 - a x^2 = b y^2, and N(t + sqrt a) = t^2 - a = b k.
  const auto t = sqrt_mod(a, b);
  if (!t) return std::nullopt;
  const Integer k = (*t * *t - a) / b;
  const auto [k0, s] = squarefree_decompose(k);
  const auto inner = solve_legendre(a, k0);
  if (!inner) return std::nullopt;
  const auto& [xi, yi, zi] = *inner;
  const Rational tq(*t), aq(a);
  return std::array<Rational, 3>{tq * xi + zi, Rational(k0 * s) * yi, tq * zi + aq * xi};
}

namespace {

// q = sign * squarefree * r^2 with r rational.
std::pair<Integer, Rational> squarefree_part(const Rational& q) {
  const Integer num = numerator_of(q), den = denominator_of(q);
  const auto [free, root] = squarefree_decompose(num * den);
  return {free, Rational(root) / Rational(den)};
}

}  // namespace

std::optional<VectorQ> isotropic_vector(const MatrixQ& q) {
  const auto diag = congruence_diagonalize(q);
  const VectorQ& d = diag.diagonal;
  const MatrixQ pt = diag.transform.transpose();
  for (Eigen::Index i = 0; i < 3; ++i) {
    if (is_zero(d(i))) return VectorQ(pt.col(i));
  }
  // w3^2 = A w1^2 + B w2^2
  const auto [sa, ra] = squarefree_part(-d(0) / d(2));
  const auto [sb, rb] = squarefree_part(-d(1) / d(2));
  const auto sol = solve_legendre(sa, sb);
  if (!sol) return std::nullopt;
  VectorQ w(3);
  w << (*sol)[0] / ra, (*sol)[1] / rb, (*sol)[2];
  return VectorQ(pt * w);
}

std::optional<VectorQ> represent_binary(const MatrixQ& q, const Rational& target) {
  MatrixQ extended = MatrixQ::Zero(3, 3);
  extended.topLeftCorner(2, 2) = q;
  extended(2, 2) = -target;
  const auto iso = isotropic_vector(extended);
  if (!iso || is_zero((*iso)(2))) return std::nullopt;
  return VectorQ(iso->head(2) / (*iso)(2));
}

}  // namespace liex

namespace liex {

namespace {

using IntVec = std::array<Integer, 3>;
using IntMat = std::array<IntVec, 3>;

Integer inverse_mod(const Integer& a, const Integer& p) {
  Integer inv;
  mpz_invert(inv.backend().data(), mod_pos(a, p).backend().data(), p.backend().data());
  return inv;
}

Integer bilinear(const IntMat& m, const IntVec& x, const IntVec& y) {
  Integer s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += x[i] * m[i][j] * y[j];
  return s;
}

std::vector<IntVec> kernel_mod(IntMat m, const Integer& p) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < 3 && row < 3; ++col) {
    int sel = -1;
    for (int r = row; r < 3; ++r)
      if (mod_pos(m[r][col], p) != 0) sel = r;
    if (sel < 0) continue;
    std::swap(m[row], m[sel]);
    const Integer inv = inverse_mod(m[row][col], p);
    for (auto& e : m[row]) e = mod_pos(e * inv, p);
    for (int r = 0; r < 3; ++r) {
      if (r == row) continue;
      const Integer f = m[r][col];
      for (int c = 0; c < 3; ++c) m[r][c] = mod_pos(m[r][c] - f * m[row][c], p);
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<IntVec> out;
  for (int free = 0; free < 3; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    IntVec v{0, 0, 0};
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = mod_pos(-m[r][free], p);
    out.push_back(v);
  }
  return out;
}

IntVec combine(const IntVec& a, const Integer& s, const IntVec& b) {
  return {a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]};
}

// v in span(a, b) with v^T m v = 0 (mod p^2); a, b lie in the kernel of m mod p.
std::optional<IntVec> isotropic_in_plane(const IntMat& m, const Integer& p, const IntVec& a, const IntVec& b) {
  const Integer qa = mod_pos(bilinear(m, a, a) / p, p);
  const Integer qb = mod_pos(bilinear(m, a, b) / p, p);
  const Integer qc = mod_pos(bilinear(m, b, b) / p, p);
  if (qc == 0) return b;
  if (p == 2) {
    if (qa == 0) return a;
    if (mod_pos(qa + 2 * qb + qc, p) == 0) return combine(a, 1, b);
    return std::nullopt;
  }
  // qc y^2 + 2 qb y + qa = 0
  const auto root = sqrt_mod_prime(qb * qb - qa * qc, p);
  if (!root) return std::nullopt;
  return combine(a, mod_pos((*root - qb) * inverse_mod(qc, p), p), b);
}

// Nonzero v mod p with m v = 0 (mod p) and v^T m v = 0 (mod p^2).
std::optional<IntVec> deepening_vector(const IntMat& m, const Integer& p) {
  const auto ker = kernel_mod(m, p);
  for (const auto& u : ker)
    if (mod_pos(bilinear(m, u, u), p * p) == 0) return u;
  if (ker.size() == 2) return isotropic_in_plane(m, p, ker[0], ker[1]);
  if (ker.size() == 3) {
    for (Integer t = 0; t < p && t < 64; ++t) {
      if (auto v = isotropic_in_plane(m, p, ker[0], combine(ker[1], t, ker[2]))) return v;
      if (auto v = isotropic_in_plane(m, p, ker[1], combine(ker[2], t, ker[0]))) return v;
    }
  }
  return std::nullopt;
}

Integer round_nearest(const Rational& q) {
  const Rational shifted = q + Rational(1, 2);
  Integer n = numerator_of(shifted), d = denominator_of(shifted);
  Integer f = n / d;
  if (n < 0 && f * d != n) --f;
  return f;
}

// Exact LLL with respect to the form g, delta = 3/4.
void lll_reduce(MatrixQ& b, const MatrixQ& g) {
  const Eigen::Index n = b.rows();
  auto orthogonalize = [&](MatrixQ& mu, VectorQ& norms) {
    MatrixQ star = b;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < i; ++j) {
        mu(i, j) = (b.row(i) * g * star.row(j).transpose())(0, 0) / norms(j);
        star.row(i) -= mu(i, j) * star.row(j);
      }
      norms(i) = (star.row(i) * g * star.row(i).transpose())(0, 0);
    }
  };
  MatrixQ mu = MatrixQ::Zero(n, n);
  VectorQ norms(n);
  orthogonalize(mu, norms);
  Eigen::Index k = 1;
  while (k < n) {
    for (Eigen::Index j = k - 1; j >= 0; --j) {
      const Integer q = round_nearest(mu(k, j));
      if (q != 0) {
        b.row(k) -= Rational(q) * b.row(j);
        orthogonalize(mu, norms);
      }
    }
    if (norms(k) >= (Rational(3, 4) - mu(k, k - 1) * mu(k, k - 1)) * norms(k - 1)) {
      ++k;
    } else {
      b.row(k).swap(b.row(k - 1));
      orthogonalize(mu, norms);
      k = std::max<Eigen::Index>(k - 1, 1);
    }
  }
}

}  // namespace

std::optional<MatrixQ> orthonormal_frame(const MatrixQ& g) {
  Integer scale = 1;
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) scale = boost::multiprecision::lcm(scale, denominator_of(g(i, j)));
  MatrixQ basis = MatrixQ::Identity(3, 3) * Rational(scale);
  // Enlarge the integral lattice one prime at a time until it is unimodular.
  for (;;) {
    const MatrixQ gram = basis * g * basis.transpose();
    const Rational det = determinant<Rational>(gram);
    if (det == 1) break;
    const auto root = rational_sqrt(det);
    if (det <= 0 || !root) return std::nullopt;
    IntMat m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = numerator_of(gram(i, j));
    const Integer p = factor(numerator_of(*root)).begin()->first;
    auto v = deepening_vector(m, p);
    if (!v) return std::nullopt;
    int pivot = 0;
    while (mod_pos((*v)[pivot], p) == 0) ++pivot;
    const Integer inv = inverse_mod((*v)[pivot], p);
    VectorQ w = VectorQ::Zero(3);
    for (int i = 0; i < 3; ++i) w += Rational(mod_pos((*v)[i] * inv, p)) * VectorQ(basis.row(i).transpose());
    basis.row(pivot) = (w / Rational(p)).transpose();
  }
  // A positive definite unimodular lattice of rank 3 is Z^3.
  lll_reduce(basis, g);
  std::vector<VectorQ> units;
  for (int c0 = -3; c0 <= 3; ++c0)
    for (int c1 = -3; c1 <= 3; ++c1)
      for (int c2 = -3; c2 <= 3; ++c2) {
        const VectorQ x = (Rational(c0) * basis.row(0) + Rational(c1) * basis.row(1) + Rational(c2) * basis.row(2)).transpose();
        if ((x.transpose() * g * x)(0, 0) == 1) units.push_back(x);
      }
  for (const auto& a : units)
    for (const auto& b : units) {
      if ((a.transpose() * g * b)(0, 0) != 0) continue;
      for (const auto& c : units) {
        if ((a.transpose() * g * c)(0, 0) != 0 || (b.transpose() * g * c)(0, 0) != 0) continue;
        MatrixQ frame(3, 3);
        frame << a.transpose(), b.transpose(), c.transpose();
        return frame;
      }
    }
  return std::nullopt;
}

}  // namespace liex
