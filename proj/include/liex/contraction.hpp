#pragma once

#include "liex/laurent.hpp"
#include "liex/structure_tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liex {

/// Basis-change family u(eps) with Laurent-polynomial entries, rows are the
/// new basis vectors (same convention as change_basis).
struct LaurentBasisFamily {
  Matrix<LaurentQ> entries;

  Eigen::Index dim() const { return entries.rows(); }

  static LaurentBasisFamily identity(Eigen::Index n);
  static LaurentBasisFamily constant(const MatrixQ& u);
  /// diag(eps^{p_1}, ..., eps^{p_n}).
  static LaurentBasisFamily diagonal(const std::vector<int>& exponents);
};

using LaurentTensor = StructureTensor<RationalFunctionQ>;

/// Structure constants of `c` in the basis u(eps). Throws Error("singular-family").
LaurentTensor transform_parametric(const StructureTensorQ& c, const LaurentBasisFamily& u);

/// First entry (0-based i, j, k) with negative eps-valuation.
struct Divergence {
  Eigen::Index i = 0, j = 0, k = 0;
  int valuation = 0;
};

struct LimitResult {
  std::optional<StructureTensorQ> tensor;
  std::optional<Divergence> divergence;

  bool converges() const { return tensor.has_value(); }
};

/// Constant terms at eps -> 0, or the first divergent entry.
LimitResult limit(const LaurentTensor& lt);

/// Smallest valuation over all nonzero entries, nullopt if all vanish.
std::optional<int> min_valuation(const LaurentTensor& lt);

struct ContractionReport {
  bool holds = false;
  StructureTensorQ limit;
  std::string limit_class;  // identify3 description; empty outside dim 3
};

/// Whether the eps -> 0 limit of `source` under `u` is the catalog algebra
/// `target` (with its parameters). Dimension 3 compares identify3 classes;
/// other dimensions compare change_basis(limit, post) with the catalog entry.
/// Throws Error("divergent-limit") with the 1-based entry and valuation.
ContractionReport verify_contraction(const StructureTensorQ& source, const LaurentBasisFamily& u,
                                     const std::string& target, std::optional<Rational> a = std::nullopt,
                                     std::optional<Rational> b = std::nullopt,
                                     const std::optional<MatrixQ>& post = std::nullopt);

/// Named families: "uF" (the 7x7 family taking gF to gE), "identity:<n>",
/// "diag:p1,p2,...". Throws Error("unknown-family").
LaurentBasisFamily builtin_family(const std::string& name);

}  // namespace liex
