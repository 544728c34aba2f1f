#pragma once

#include "liex/liealg.hpp"
#include "liex/structure_tensor.hpp"

#include <optional>
#include <string>

namespace liex {

/// Basis-independent data of a 3-dimensional real Lie algebra.
struct InvariantSignature {
  int dim = 0;
  int dim_derived = 0;
  int dim_center = 0;
  bool unimodular = true;
  std::optional<int> solvability_degree;
  std::optional<int> nilpotency_degree;
  int killing_rank = 0;
  Inertia killing_signature;
  /// tr(A)^2 / det(A) for A = ad_x restricted to [g,g], x outside [g,g];
  /// defined only when dim [g,g] = 2.
  std::optional<Rational> adjoint_parameter;

  friend bool operator==(const InvariantSignature&, const InvariantSignature&) = default;
};

/// Throws Error("wrong-dimension") unless dim = 3.
InvariantSignature signature(const StructureTensorQ& c);

struct Identification {
  std::string label;             // catalog label
  std::optional<Rational> a;     // A3.4, 0 < |a| <= 1, a != 1
  std::optional<Rational> b;     // A3.5, b >= 0
  MatrixQ witness;               // change_basis(c, witness) == catalog(label, a, b)
};

/// Mubarakzyanov class of a 3-dim algebra with an exact rational basis-change witness.
///
/// A3.4 with a = 1 is the same algebra as A3.3 and is reported as A3.3.
/// Errors: "wrong-dimension"; "parameter-not-rational" when the class is
/// A3.4 or A3.5 with an irrational parameter; "no-rational-witness" when the
/// real class is known but no rational basis reaches the canonical form
/// (a non-split rational form of sl(2,R) or so(3), or A3.5 with an
/// irrational eigenvalue scale).
Identification identify3(const StructureTensorQ& c);

/// u with change_basis(c1, u) == c2, or nullopt if the algebras differ.
std::optional<MatrixQ> are_isomorphic(const StructureTensorQ& c1, const StructureTensorQ& c2);

/// Human-readable class name including the parameter, e.g. "A3.4(a=1/2)".
std::string describe(const Identification& id);

}  // namespace liex
