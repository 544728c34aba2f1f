#pragma once

#include "liex/linalg.hpp"
#include "liex/semigroup.hpp"
#include "liex/structure_tensor.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace liex {

/// Position of lambda_alpha e_i in the expanded basis: flat = i * N + alpha
/// (0-based), i.e. E_{(i-1)N+alpha} in 1-based numbering.
struct ExpandedBasisIndex {
  int i = 0;
  int alpha = 0;
  int flat(int order) const { return i * order + alpha; }
  static ExpandedBasisIndex from_flat(int flat, int order) { return {flat / order, flat % order}; }
};

/// The vector lambda_alpha v of S x g, given v in g.
VectorQ lift(const VectorQ& v, int alpha, int order);

/// Brackets [lambda_a e_i, lambda_b e_j] = lambda_{ab} [e_i, e_j].
/// The table needs only be commutative; associativity is what makes the
/// result a Lie algebra.
StructureTensorQ s_expand(const SemigroupTable& s, const StructureTensorQ& c);

/// Algebra on {lambda_a e_i : lambda_a != 0_S} (flat order, zero skipped)
/// with brackets landing on 0_S dropped. Throws Error("no-zero-element").
StructureTensorQ zero_reduce(const SemigroupTable& s, const StructureTensorQ& c);

/// Span of lambda_gamma v for gamma in SS and v in [g, g].
SubspaceQ product_set_span(const SemigroupTable& s, const SubspaceQ& derived_of_g);

/// Resonant subset decomposition g = (+)_p V_p, S = U_p S_p with index sets i(p,q).
struct ResonanceBlock {
  SubspaceQ space;               // V_p inside g
  std::vector<int> elements;     // S_p, 0-based semigroup indices
  std::vector<int> checked;      // optional partition S_p = checked U hatted
  std::vector<int> hatted;
};

struct ResonanceSpec {
  std::vector<ResonanceBlock> blocks;
  std::map<std::pair<int, int>, std::vector<int>> targets;  // i(p,q), 0-based block indices
  bool has_partition() const;
};

/// Checks every resonance condition over all (p, q) pairs.
/// Throws Error("resonance-violation") naming the failed condition.
void validate_resonance(const SemigroupTable& s, const StructureTensorQ& c, const ResonanceSpec& spec);

/// Basis of G_R: lambda_alpha v for each block p, alpha in S_p (ascending),
/// v in the echelon basis of V_p. Rows are vectors of S x g.
MatrixQ resonant_basis(const SemigroupTable& s, const StructureTensorQ& c, const ResonanceSpec& spec);

/// G_R = (+)_p S_p x V_p expressed in `resonant_basis`.
StructureTensorQ resonant_subalgebra(const SemigroupTable& s, const StructureTensorQ& c,
                                     const ResonanceSpec& spec);

/// Reduction of G_R along the partition: checked = (+) checked_p x V_p,
/// hatted = (+) hatted_p x V_p. Requires every block to carry a partition.
StructureTensorQ resonant_reduction(const SemigroupTable& s, const StructureTensorQ& c,
                                    const ResonanceSpec& spec);

/// Bracket of `checked` projected onto `checked` along `hatted`, expressed in
/// the echelon basis of `checked`.
/// Throws Error("not-a-complement") or Error("reduction-condition-violated").
StructureTensorQ reduce_decomposition(const StructureTensorQ& c, const SubspaceQ& checked,
                                      const SubspaceQ& hatted);

/// Restriction of the bracket to a closed subspace, in its echelon basis.
/// Throws Error("not-closed") with the 1-based offending pair.
StructureTensorQ extract_subalgebra(const StructureTensorQ& c, const SubspaceQ& span);

/// Same, in the basis given by the (independent) rows of `basis`.
/// Throws Error("dependent-basis") or Error("not-closed").
StructureTensorQ subalgebra_in_basis(const StructureTensorQ& c, const MatrixQ& basis);

}  // namespace liex
