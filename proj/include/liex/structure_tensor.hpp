#pragma once

#include "liex/error.hpp"
#include "liex/linalg.hpp"
#include "liex/rational.hpp"

#include <vector>

namespace liex {

/// Structure constants C_{ij}^k of an n-dimensional algebra, [e_i, e_j] = sum_k C_{ij}^k e_k.
///
/// Stored as the n adjoint matrices: ad(i)(k, j) = C_{ij}^k, i.e. column j of
/// ad(i) holds the coordinates of [e_i, e_j]. Indices are 0-based.
template <typename Scalar>
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(Eigen::Index n)
      : n_(n), ad_(static_cast<size_t>(n), Matrix<Scalar>::Zero(n, n)) {}

  Eigen::Index dim() const { return n_; }

  const Scalar& operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return ad_[static_cast<size_t>(i)](k, j);
  }
  Scalar& operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k) {
    return ad_[static_cast<size_t>(i)](k, j);
  }

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(Eigen::Index i, Eigen::Index j, const Vector<Scalar>& v) {
    ad_[static_cast<size_t>(i)].col(j) = v;
    ad_[static_cast<size_t>(j)].col(i) = -v;
  }
  /// Adds `coeff` e_k to [e_i, e_j] (and its negative to [e_j, e_i]).
  void add(Eigen::Index i, Eigen::Index j, Eigen::Index k, const Scalar& coeff) {
    ad_[static_cast<size_t>(i)](k, j) += coeff;
    ad_[static_cast<size_t>(j)](k, i) -= coeff;
  }

  const Matrix<Scalar>& ad(Eigen::Index i) const { return ad_[static_cast<size_t>(i)]; }

  Vector<Scalar> bracket_basis(Eigen::Index i, Eigen::Index j) const {
    return ad_[static_cast<size_t>(i)].col(j);
  }

  /// Skips zero coordinates, so sparse arguments are cheap.
  Vector<Scalar> bracket(const Vector<Scalar>& x, const Vector<Scalar>& y) const {
    Vector<Scalar> out = Vector<Scalar>::Zero(n_);
    for (Eigen::Index i = 0; i < n_; ++i) {
      if (is_zero(x(i))) continue;
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (i == j || is_zero(y(j))) continue;
        const Scalar f = x(i) * y(j);
        const Matrix<Scalar>& ad = ad_[static_cast<size_t>(i)];
        for (Eigen::Index k = 0; k < n_; ++k) {
          if (!is_zero(ad(k, j))) out(k) += f * ad(k, j);
        }
      }
    }
    return out;
  }

  /// ad_x as a matrix acting on coordinate columns.
  Matrix<Scalar> ad_of(const Vector<Scalar>& x) const {
    Matrix<Scalar> m = Matrix<Scalar>::Zero(n_, n_);
    for (Eigen::Index i = 0; i < n_; ++i) {
      if (!is_zero(x(i))) m += x(i) * ad_[static_cast<size_t>(i)];
    }
    return m;
  }

  bool is_abelian() const {
    for (const auto& a : ad_) {
      if (!a.isZero()) return false;
    }
    return true;
  }

  template <typename Other>
  StructureTensor<Other> cast() const {
    StructureTensor<Other> out(n_);
    for (Eigen::Index i = 0; i < n_; ++i) {
      for (Eigen::Index j = 0; j < n_; ++j) {
        for (Eigen::Index k = 0; k < n_; ++k) out(i, j, k) = Other((*this)(i, j, k));
      }
    }
    return out;
  }

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    if (a.n_ != b.n_) return false;
    for (size_t i = 0; i < a.ad_.size(); ++i) {
      if (!(a.ad_[i] == b.ad_[i])) return false;
    }
    return true;
  }

 private:
  Eigen::Index n_ = 0;
  std::vector<Matrix<Scalar>> ad_;
};

using StructureTensorQ = StructureTensor<Rational>;

/// Constants of the same bracket in the basis f_i = sum_p u(i, p) e_p,
/// given u and its inverse:
///   C'_{ij}^k = sum u(i,p) u(j,q) C_{pq}^r uinv(r,k).
template <typename Scalar>
StructureTensor<Scalar> change_basis(const StructureTensor<Scalar>& c, const Matrix<Scalar>& u,
                                     const Matrix<Scalar>& u_inv) {
  const Eigen::Index n = c.dim();
  StructureTensor<Scalar> out(n);
  const Matrix<Scalar> left = u_inv.transpose();
  const Matrix<Scalar> right = u.transpose();
  for (Eigen::Index i = 0; i < n; ++i) {
    Matrix<Scalar> ad_new = left * (c.ad_of(u.row(i).transpose()) * right);
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) out(i, j, k) = ad_new(k, j);
    }
  }
  return out;
}

/// Throws Error("singular-matrix") if u is not invertible.
template <typename Scalar>
StructureTensor<Scalar> change_basis(const StructureTensor<Scalar>& c, const Matrix<Scalar>& u) {
  if (u.rows() != c.dim() || u.cols() != c.dim()) {
    throw Error("dimension-mismatch", "basis change has wrong size");
  }
  const auto inv = inverse<Scalar>(u);
  if (!inv) throw Error("singular-matrix", "basis change matrix is singular");
  return change_basis(c, u, *inv);
}

}  // namespace liex
