#pragma once

// Exact dense linear algebra over any field scalar (Rational, RationalFunction).
// Eigen's decompositions pivot on magnitude, which is meaningless for exact
// types, so elimination is done here with "first nonzero" pivoting.

#include "liex/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace liex {

template <typename Scalar>
inline bool is_zero(const Scalar& s) {
  return s == Scalar(0);
}

/// Reduced row-echelon form of the rows of `m`, zero rows dropped.
template <typename Scalar>
struct Echelon {
  Matrix<Scalar> rows;
  std::vector<Eigen::Index> pivots;
};

template <typename Scalar>
Echelon<Scalar> rref(Matrix<Scalar> m) {
  const Eigen::Index nr = m.rows(), nc = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < nc && r < nr; ++c) {
    Eigen::Index p = r;
    while (p < nr && is_zero(m(p, c))) ++p;
    if (p == nr) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < nc; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < nr; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index j = c; j < nc; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {Matrix<Scalar>(m.topRows(r)), std::move(pivots)};
}

template <typename Scalar>
Eigen::Index rank(const Matrix<Scalar>& m) {
  return static_cast<Eigen::Index>(rref(m).pivots.size());
}

/// Columns form a basis of {x : a x = 0}.
template <typename Scalar>
Matrix<Scalar> null_space(const Matrix<Scalar>& a) {
  const Eigen::Index n = a.cols();
  const auto e = rref<Scalar>(a);
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (auto p : e.pivots) is_pivot[static_cast<size_t>(p)] = true;
  const Eigen::Index nfree = n - static_cast<Eigen::Index>(e.pivots.size());
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(n, nfree);
  Eigen::Index col = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    basis(f, col) = Scalar(1);
    for (size_t r = 0; r < e.pivots.size(); ++r) {
      basis(e.pivots[r], col) = -e.rows(static_cast<Eigen::Index>(r), f);
    }
    ++col;
  }
  return basis;
}

/// Some x with a x = b, or nullopt if inconsistent.
template <typename Scalar>
std::optional<Vector<Scalar>> solve(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto e = rref<Scalar>(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Zero(a.cols());
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    x(e.pivots[r]) = e.rows(static_cast<Eigen::Index>(r), a.cols());
  }
  return x;
}

template <typename Scalar>
std::optional<Matrix<Scalar>> inverse(const Matrix<Scalar>& a) {
  const Eigen::Index n = a.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug << a, Matrix<Scalar>::Identity(n, n);
  const auto e = rref<Scalar>(aug);
  if (static_cast<Eigen::Index>(e.pivots.size()) < n || e.pivots[static_cast<size_t>(n - 1)] != n - 1) {
    return std::nullopt;
  }
  return Matrix<Scalar>(e.rows.rightCols(n));
}

template <typename Scalar>
Scalar determinant(Matrix<Scalar> m) {
  const Eigen::Index n = m.rows();
  Scalar det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = Scalar(1) / m(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const Scalar f = m(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Linear subspace of Scalar^n stored as a reduced row-echelon basis.
template <typename Scalar>
class Subspace {
 public:
  explicit Subspace(Eigen::Index ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the rows of `generators`.
  static Subspace from_rows(const Matrix<Scalar>& generators) {
    Subspace s(generators.cols());
    auto e = rref<Scalar>(generators);
    s.basis_ = std::move(e.rows);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  static Subspace from_vectors(const std::vector<Vector<Scalar>>& gens, Eigen::Index ambient) {
    Matrix<Scalar> m(static_cast<Eigen::Index>(gens.size()), ambient);
    for (size_t i = 0; i < gens.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = gens[i].transpose();
    return from_rows(m);
  }

  static Subspace whole(Eigen::Index n) {
    return from_rows(Matrix<Scalar>::Identity(n, n));
  }

  Eigen::Index ambient() const { return ambient_; }
  Eigen::Index dim() const { return basis_.rows(); }
  bool is_zero_space() const { return dim() == 0; }
  /// Rows are the echelon basis.
  const Matrix<Scalar>& basis() const { return basis_; }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }
  Vector<Scalar> vector(Eigen::Index i) const { return basis_.row(i).transpose(); }

  /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
  std::optional<Vector<Scalar>> coordinates(const Vector<Scalar>& v) const {
    Vector<Scalar> coords(dim());
    Vector<Scalar> rest = v;
    for (Eigen::Index r = 0; r < dim(); ++r) {
      coords(r) = v(pivots_[static_cast<size_t>(r)]);
      if (!is_zero(coords(r))) rest -= coords(r) * basis_.row(r).transpose();
    }
    for (Eigen::Index i = 0; i < rest.size(); ++i) {
      if (!is_zero(rest(i))) return std::nullopt;
    }
    return coords;
  }

  bool contains(const Vector<Scalar>& v) const { return coordinates(v).has_value(); }

  bool contains(const Subspace& other) const {
    for (Eigen::Index r = 0; r < other.dim(); ++r) {
      if (!contains(other.vector(r))) return false;
    }
    return true;
  }

  Subspace operator+(const Subspace& other) const {
    Matrix<Scalar> m(dim() + other.dim(), ambient_);
    m << basis_, other.basis_;
    return from_rows(m);
  }

  Subspace intersect(const Subspace& other) const {
    // x = a^T B = b^T C  <=>  [B; -C]^T (a; b) = 0
    Matrix<Scalar> stacked(dim() + other.dim(), ambient_);
    stacked << basis_, -other.basis_;
    const Matrix<Scalar> ker = null_space<Scalar>(stacked.transpose());
    Matrix<Scalar> gens = ker.topRows(dim()).transpose() * basis_;
    return from_rows(gens);
  }

  /// Echelon bases are unique, so equality is entrywise.
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.basis_ == b.basis_;
  }

 private:
  Eigen::Index ambient_;
  Matrix<Scalar> basis_;
  std::vector<Eigen::Index> pivots_;
};

using SubspaceQ = Subspace<Rational>;

}  // namespace liex
