#include "liex/identify.hpp"

#include "liex/conic.hpp"
#include "liex/error.hpp"

#include <vector>

namespace liex {

namespace {

void require_dim3(const StructureTensorQ& c) {
  if (c.dim() != 3) {
    throw Error("wrong-dimension", "expected a 3-dimensional algebra, got dimension " + std::to_string(c.dim()),
                {static_cast<long>(c.dim())});
  }
}

VectorQ unit(Eigen::Index n, Eigen::Index i) {
  VectorQ v = VectorQ::Zero(n);
  v(i) = 1;
  return v;
}

VectorQ outside(const SubspaceQ& s) {
  for (Eigen::Index i = 0; i < s.ambient(); ++i) {
    if (!s.contains(unit(s.ambient(), i))) return unit(s.ambient(), i);
  }
  throw Error("internal", "subspace has no complement vector");
}

// ad_x restricted to the 2-dim ideal d, in the echelon basis of d.
MatrixQ restricted_adjoint(const StructureTensorQ& c, const VectorQ& x, const SubspaceQ& d) {
  MatrixQ a(2, 2);
  const MatrixQ ad = c.ad_of(x);
  for (Eigen::Index j = 0; j < 2; ++j) a.col(j) = *d.coordinates(VectorQ(ad * d.vector(j)));
  return a;
}

MatrixQ rows_of(const std::vector<VectorQ>& vs) {
  MatrixQ m(static_cast<Eigen::Index>(vs.size()), vs.front().size());
  for (size_t i = 0; i < vs.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
  return m;
}

Identification sl2_witness(const StructureTensorQ& c, const MatrixQ& k) {
  // Target basis e1 = -F, e2 = H/2, e3 = E for a standard triple (H, E, F).
  const auto e = isotropic_vector(k);
  if (!e) throw Error("no-rational-witness", "Killing form has no rational isotropic vector (non-split form)");
  const MatrixQ ad_e = c.ad_of(*e);
  const auto y = solve<Rational>(MatrixQ(-(ad_e * ad_e)), VectorQ(2 * *e));
  if (!y) throw Error("internal", "nilpotent element has no sl2 completion");
  const VectorQ h = ad_e * *y;
  MatrixQ system(6, 3);
  system << ad_e, c.ad_of(h) + 2 * MatrixQ::Identity(3, 3);
  VectorQ rhs(6);
  rhs << h, VectorQ::Zero(3);
  const auto f = solve<Rational>(system, rhs);
  if (!f) throw Error("internal", "sl2 triple has no rational F");
  return {"sl2R", std::nullopt, std::nullopt, rows_of({VectorQ(-*f), VectorQ(h / 2), *e})};
}

Identification so3_witness(const StructureTensorQ& c, const MatrixQ& k) {
  // Killing form of the catalog so(3) is -2 I; look for a K-orthonormal frame.
  const auto frame = orthonormal_frame(MatrixQ(k / Rational(-2)));
  if (!frame) throw Error("no-rational-witness", "Killing form is not rationally equivalent to -2 I");
  const VectorQ f1 = frame->row(0).transpose(), f2 = frame->row(1).transpose();
  return {"so3", std::nullopt, std::nullopt, rows_of({f1, f2, c.bracket(f1, f2)})};
}

Identification solvable_witness(const StructureTensorQ& c, const SubspaceQ& d) {
  const VectorQ x = outside(d);
  const MatrixQ a = restricted_adjoint(c, x, d);
  const Rational t = a.trace(), det = determinant<Rational>(a);
  const Rational disc = t * t - 4 * det;
  auto in_g = [&](const VectorQ& coords) { return VectorQ(d.basis().transpose() * coords); };

  if (disc == 0) {
    const Rational mu = t / 2;
    const VectorQ e3 = -x / mu;
    const MatrixQ b = -a / mu;  // eigenvalue -1
    if (a == mu * MatrixQ::Identity(2, 2)) {
      return {"A3.3", std::nullopt, std::nullopt, rows_of({d.vector(0), d.vector(1), e3})};
    }
    const MatrixQ shifted = b + MatrixQ::Identity(2, 2);
    VectorQ v2 = unit(2, 0);
    if ((shifted * v2).isZero()) v2 = unit(2, 1);
    const VectorQ v1 = -(shifted * v2);
    return {"A3.2", std::nullopt, std::nullopt, rows_of({in_g(v1), in_g(v2), e3})};
  }

  if (disc > 0) {
    const auto root = rational_sqrt(disc);
    if (!root) {
      throw Error("parameter-not-rational", "A3.4 with irrational parameter (discriminant " + to_string(disc) + ")");
    }
    Rational mu1 = (t + *root) / 2, mu2 = (t - *root) / 2;
    if (abs(mu2) > abs(mu1) || (abs(mu2) == abs(mu1) && mu2 > 0)) std::swap(mu1, mu2);
    const Rational param = mu2 / mu1;
    const MatrixQ id = MatrixQ::Identity(2, 2);
    const VectorQ v1 = null_space<Rational>(MatrixQ(a - mu1 * id)).col(0);
    const VectorQ v2 = null_space<Rational>(MatrixQ(a - mu2 * id)).col(0);
    return {"A3.4", param, std::nullopt, rows_of({in_g(v1), in_g(v2), VectorQ(-x / mu1)})};
  }

  // complex pair p +- i q
  const Rational p = t / 2;
  const auto q = rational_sqrt(-disc / 4);
  if (!q) {
    if (p != 0) throw Error("parameter-not-rational", "A3.5 with irrational parameter");
    throw Error("no-rational-witness", "A3.5 eigenvalue scale is irrational");
  }
  // scale so that the eigenvalues become -b +- i with b >= 0
  const Rational lambda = (p > 0 ? Rational(-1) : Rational(1)) / *q;
  const Rational param = -lambda * p;
  const MatrixQ bmat = lambda * a;
  const VectorQ v1 = unit(2, 0);
  const VectorQ v2 = (bmat + param * MatrixQ::Identity(2, 2)) * v1;
  return {"A3.5", std::nullopt, param, rows_of({in_g(v1), in_g(v2), VectorQ(lambda * x)})};
}

}  // namespace

InvariantSignature signature(const StructureTensorQ& c) {
  require_dim3(c);
  InvariantSignature s;
  s.dim = 3;
  const auto d = derived_algebra(c);
  s.dim_derived = static_cast<int>(d.dim());
  s.dim_center = static_cast<int>(center(c).dim());
  s.unimodular = is_unimodular(c);
  s.solvability_degree = solvability_degree(c);
  s.nilpotency_degree = nilpotency_degree(c);
  const auto k = killing_form(c);
  s.killing_rank = k.rank;
  s.killing_signature = k.signature;
  if (d.dim() == 2) {
    const MatrixQ a = restricted_adjoint(c, outside(d), d);
    const Rational det = determinant<Rational>(a);
    if (det != 0) s.adjoint_parameter = a.trace() * a.trace() / det;
  }
  return s;
}

Identification identify3(const StructureTensorQ& c) {
  require_dim3(c);
  require_lie(c);
  const auto d = derived_algebra(c);
  Identification id;
  switch (d.dim()) {
    case 0:
      id = {"3A1", std::nullopt, std::nullopt, MatrixQ::Identity(3, 3)};
      break;
    case 1: {
      const VectorQ z = d.vector(0);
      const auto zc = center(c);
      if (zc.contains(z)) {
        for (Eigen::Index i = 0; i < 3 && id.label.empty(); ++i) {
          for (Eigen::Index j = i + 1; j < 3 && id.label.empty(); ++j) {
            const VectorQ br = c.bracket_basis(i, j);
            if (!br.isZero()) id = {"A3.1", std::nullopt, std::nullopt, rows_of({br, unit(3, i), unit(3, j)})};
          }
        }
      } else {
        const MatrixQ ad = c.ad_of(z);
        for (Eigen::Index j = 0; j < 3 && id.label.empty(); ++j) {
          const VectorQ br = ad.col(j);
          if (br.isZero()) continue;
          // [z, e_j] = mu z
          Eigen::Index nz = 0;
          while (is_zero(z(nz))) ++nz;
          const Rational mu = br(nz) / z(nz);
          id = {"A2.1+A1", std::nullopt, std::nullopt, rows_of({z, VectorQ(unit(3, j) / mu), zc.vector(0)})};
        }
      }
      break;
    }
    case 2:
      id = solvable_witness(c, d);
      if (id.label == "A3.4" && *id.a == 1) throw Error("internal", "A3.4 with a = 1 reached");
      break;
    default: {
      const auto k = killing_form(c);
      if (k.signature.positive == 0 && k.signature.negative == 3) {
        id = so3_witness(c, k.matrix);
      } else {
        id = sl2_witness(c, k.matrix);
      }
    }
  }
  if (id.label.empty()) throw Error("internal", "classification fell through");
  if (!(change_basis(c, id.witness) == catalog(id.label, id.a, id.b))) {
    throw Error("internal", "identification witness does not reach the canonical form of " + id.label);
  }
  return id;
}

std::optional<MatrixQ> are_isomorphic(const StructureTensorQ& c1, const StructureTensorQ& c2) {
  require_dim3(c1);
  require_dim3(c2);
  const auto id1 = identify3(c1);
  const auto id2 = identify3(c2);
  if (id1.label != id2.label || id1.a != id2.a || id1.b != id2.b) return std::nullopt;
  MatrixQ u = *inverse<Rational>(id2.witness) * id1.witness;
  if (!(change_basis(c1, u) == c2)) throw Error("internal", "composed isomorphism witness failed");
  return u;
}

std::string describe(const Identification& id) {
  if (id.a) return id.label + "(a=" + to_string(*id.a) + ")";
  if (id.b) return id.label + "(b=" + to_string(*id.b) + ")";
  return id.label;
}

}  // namespace liex
