#pragma once

#include "liex/expansion.hpp"
#include "liex/identify.hpp"
#include "liex/semigroup.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace liex {

enum class SearchMode { subalgebra, zero_reduce, resonant };

std::string to_string(SearchMode m);
/// Throws InputError.
SearchMode parse_search_mode(const std::string& text);
const std::set<SearchMode>& all_search_modes();

/// One way of reaching a 3-dim algebra from `source` by S-expansion.
///
/// `ambient` is the algebra the search looked in: S x g (subalgebra), its
/// 0_S-reduction (zero_reduce), or the resonant subalgebra / its reduction
/// (resonant). Rows of `basis` are vectors of the ambient algebra whose
/// brackets are exactly the catalog constants of (label, a, b).
struct Witness {
  SemigroupTable semigroup;
  SearchMode mode = SearchMode::subalgebra;
  std::optional<ResonanceSpec> resonance;  // resonant mode only
  bool reduced = false;                    // resonant reduction rather than G_R
  SubspaceQ span;                          // span of `basis` rows in the ambient
  MatrixQ basis;
  std::string label;
  std::optional<Rational> a, b;

  std::string class_name() const;
};

/// Ambient algebra a witness refers to, rebuilt from scratch.
StructureTensorQ witness_ambient(const StructureTensorQ& source, const Witness& w);

/// Independent re-check: rebuilds the ambient and compares the bracket on
/// `basis` with the catalog entry.
bool replay_witness(const StructureTensorQ& source, const Witness& w);

/// Number of configurations examined, per mode.
struct SpaceSize {
  long semigroups = 0;
  long subalgebra_candidates = 0;
  long zero_reduce_candidates = 0;
  long resonant_candidates = 0;

  long total() const { return subalgebra_candidates + zero_reduce_candidates + resonant_candidates; }
};

struct Exploration {
  std::vector<Witness> witnesses;  // every 3-dim algebra reached, one per (semigroup, mode, span)
  SpaceSize space;
};

/// Bounded enumeration over all Abelian semigroups of order 1..max_order (up
/// to isomorphism). Subalgebra candidates are spans of three vectors drawn
/// from the basis and the differences E_a - E_b. Deterministic order.
Exploration explore(const StructureTensorQ& source, int max_order, const std::set<SearchMode>& modes,
                    int bound = kDefaultMaxOrder);

struct SearchResult {
  std::vector<Witness> witnesses;
  SpaceSize space;
};

/// Witnesses from explore() whose class matches the target; an unset a/b
/// matches any parameter value.
SearchResult find_connection(const StructureTensorQ& source, const std::string& target,
                             std::optional<Rational> a, std::optional<Rational> b, int max_order,
                             const std::set<SearchMode>& modes, int bound = kDefaultMaxOrder);

/// Graph node: a catalog class, e.g. {"A3.4", a = -1}.
struct ClassLabel {
  std::string name;
  std::optional<Rational> a, b;

  std::string display() const;
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// Parses "A3.4(a=-1)", "A3.5(b=1)", plain names, and the set name "all3".
std::vector<ClassLabel> parse_labels(const std::string& text);

struct Edge {
  int from = 0, to = 0;            // indices into labels
  std::optional<Witness> witness;  // first witness in search order, if any
};

struct ConnectivityReport {
  std::vector<ClassLabel> labels;
  std::vector<Edge> edges;  // all ordered pairs, row-major
  std::vector<SpaceSize> spaces;  // per source label
};

ConnectivityReport connectivity_matrix(const std::vector<ClassLabel>& labels, int max_order,
                                       const std::set<SearchMode>& modes, int bound = kDefaultMaxOrder);

/// Graphviz rendering: found edges solid, self-loops omitted.
std::string to_dot(const ConnectivityReport& report);

/// Image of a vector of S x g under the semigroup relabeling alpha -> perm[alpha].
VectorQ relabel_expanded(const VectorQ& v, const std::vector<int>& perm, int order);

}  // namespace liex
