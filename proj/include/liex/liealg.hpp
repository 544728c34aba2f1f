#pragma once

#include "liex/linalg.hpp"
#include "liex/structure_tensor.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace liex {

struct AntisymmetryWitness {
  std::array<Eigen::Index, 3> ijk;  // 0-based, C_ij^k != -C_ji^k
};

struct JacobiWitness {
  std::array<Eigen::Index, 3> ijk;  // 0-based basis triple
  VectorQ residual;                 // [e_i,[e_j,e_k]] + cyclic
};

struct LieReport {
  std::optional<AntisymmetryWitness> antisymmetry;
  std::optional<JacobiWitness> jacobi;
  bool ok() const { return !antisymmetry && !jacobi; }
};

LieReport validate_lie(const StructureTensorQ& c);

/// Throws Error("not-antisymmetric") or Error("jacobi-violation") with the 1-based triple.
void require_lie(const StructureTensorQ& c);

/// tr(ad_{e_i}) = sum_j C_ij^j for each i.
VectorQ adjoint_traces(const StructureTensorQ& c);
bool is_unimodular(const StructureTensorQ& c);

/// Span of [a, b] for a in `a`, b in `b`.
SubspaceQ bracket_span(const StructureTensorQ& c, const SubspaceQ& a, const SubspaceQ& b);
SubspaceQ derived_algebra(const StructureTensorQ& c);

/// g, [g,g], [[g,g],[g,g]], ... up to and including the first repeated term.
std::vector<SubspaceQ> derived_series(const StructureTensorQ& c);
/// g, [g,g], [g,[g,g]], ... up to and including the first repeated term.
std::vector<SubspaceQ> lower_central_series(const StructureTensorQ& c);

/// Number of steps until the series reaches 0; nullopt when it stalls above 0.
std::optional<int> solvability_degree(const StructureTensorQ& c);
std::optional<int> nilpotency_degree(const StructureTensorQ& c);

SubspaceQ center(const StructureTensorQ& c);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Congruence diagonalization P q P^T = diag(d) of a symmetric matrix.
struct Diagonalization {
  MatrixQ transform;  // P
  VectorQ diagonal;   // d
};
Diagonalization congruence_diagonalize(const MatrixQ& q);
Inertia inertia(const MatrixQ& symmetric);

struct KillingForm {
  MatrixQ matrix;  // K(i,j) = tr(ad_i ad_j)
  int rank = 0;
  Inertia signature;
};
KillingForm killing_form(const StructureTensorQ& c);

/// Basis of Der(c). A derivation D acts on coordinate columns: D e_j = sum_i D(i,j) e_i.
std::vector<MatrixQ> derivation_algebra(const StructureTensorQ& c);

/// Lie-nilpotency of the matrix algebra spanned by `basis` under the commutator.
/// Throws Error("not-closed") if the span is not closed under [A,B] = AB - BA.
bool is_nilpotent_matrix_algebra(const std::vector<MatrixQ>& basis);

/// Catalog labels in canonical order.
const std::vector<std::string>& catalog_names();

/// Builds a named algebra. `a` applies to A3.4 (0 < |a| <= 1), `b` to A3.5 (b >= 0).
/// Throws Error("unknown-name") or Error("parameter-out-of-range").
StructureTensorQ catalog(const std::string& name, std::optional<Rational> a = std::nullopt,
                         std::optional<Rational> b = std::nullopt);

/// Builds a tensor from 1-based (i, j, k, coeff) entries meaning [e_i, e_j] += coeff e_k.
struct BracketTerm {
  int i, j, k;
  Rational coeff;
};
StructureTensorQ tensor_from_terms(int dim, const std::vector<BracketTerm>& terms);

}  // namespace liex
