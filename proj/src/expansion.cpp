#include "liex/expansion.hpp"

#include "liex/error.hpp"
#include "liex/liealg.hpp"

#include <algorithm>
#include <set>

namespace liex {

VectorQ lift(const VectorQ& v, int alpha, int order) {
  VectorQ out = VectorQ::Zero(v.size() * order);
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i * order + alpha) = v(i);
  return out;
}

StructureTensorQ s_expand(const SemigroupTable& s, const StructureTensorQ& c) {
  const int order = s.order();
  const auto n = static_cast<int>(c.dim());
  StructureTensorQ out(n * order);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (is_zero(c(i, j, k))) continue;
        for (int a = 0; a < order; ++a) {
          for (int b = 0; b < order; ++b) out(i * order + a, j * order + b, k * order + s.at(a, b)) = c(i, j, k);
        }
      }
    }
  }
  return out;
}

StructureTensorQ zero_reduce(const SemigroupTable& s, const StructureTensorQ& c) {
  const auto zero = zero_element(s);
  if (!zero) throw Error("no-zero-element", "semigroup has no zero element");
  const int order = s.order();
  const int kept = order - 1;
  const auto n = static_cast<int>(c.dim());
  auto slot = [&](int alpha) { return alpha < *zero ? alpha : alpha - 1; };

  StructureTensorQ out(n * kept);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (is_zero(c(i, j, k))) continue;
        for (int a = 0; a < order; ++a) {
          for (int b = 0; b < order; ++b) {
            const int g = s.at(a, b);
            if (a == *zero || b == *zero || g == *zero) continue;
            out(i * kept + slot(a), j * kept + slot(b), k * kept + slot(g)) = c(i, j, k);
          }
        }
      }
    }
  }
  if (validate_semigroup(s).ok() && validate_lie(c).ok() && !validate_lie(out).ok()) {
    throw Error("internal", "0_S-reduced algebra fails the Jacobi identity");
  }
  return out;
}

SubspaceQ product_set_span(const SemigroupTable& s, const SubspaceQ& derived_of_g) {
  std::set<int> products;
  for (int v : s.cells()) products.insert(v);
  std::vector<VectorQ> gens;
  for (int gamma : products) {
    for (Eigen::Index r = 0; r < derived_of_g.dim(); ++r) gens.push_back(lift(derived_of_g.vector(r), gamma, s.order()));
  }
  return SubspaceQ::from_vectors(gens, derived_of_g.ambient() * s.order());
}

bool ResonanceSpec::has_partition() const {
  return !blocks.empty() && std::all_of(blocks.begin(), blocks.end(), [](const ResonanceBlock& b) {
    return !b.checked.empty() || !b.hatted.empty();
  });
}

namespace {

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

const std::vector<int>& targets_of(const ResonanceSpec& spec, int p, int q) {
  static const std::vector<int> empty;
  auto it = spec.targets.find({p, q});
  if (it == spec.targets.end()) it = spec.targets.find({q, p});
  return it == spec.targets.end() ? empty : it->second;
}

// Intersection over r in i(p,q) of member(r); the whole semigroup if i(p,q) is empty.
template <typename Member>
std::set<int> intersect_targets(const std::vector<int>& targets, int order, Member member) {
  std::set<int> acc;
  for (int a = 0; a < order; ++a) acc.insert(a);
  for (int r : targets) {
    const auto m = member(r);
    std::set<int> next;
    for (int a : acc) {
      if (m.count(a)) next.insert(a);
    }
    acc = std::move(next);
  }
  return acc;
}

[[noreturn]] void violation(const std::string& what, std::vector<long> witness) {
  throw Error("resonance-violation", what, std::move(witness));
}

}  // namespace

void validate_resonance(const SemigroupTable& s, const StructureTensorQ& c, const ResonanceSpec& spec) {
  const int nblocks = static_cast<int>(spec.blocks.size());
  const int order = s.order();
  if (nblocks == 0) violation("resonance needs at least one block", {});

  Eigen::Index total = 0;
  SubspaceQ sum(c.dim());
  std::set<int> covered;
  for (int p = 0; p < nblocks; ++p) {
    const auto& b = spec.blocks[static_cast<size_t>(p)];
    if (b.space.ambient() != c.dim()) throw InputError("resonance block has wrong ambient dimension");
    for (int a : b.elements) {
      if (a < 0 || a >= order) throw InputError("resonance block element out of range");
    }
    total += b.space.dim();
    sum = sum + b.space;
    covered.insert(b.elements.begin(), b.elements.end());
  }
  if (total != c.dim() || sum.dim() != c.dim()) violation("subspaces V_p do not form a direct sum equal to g", {});
  if (static_cast<int>(covered.size()) != order) violation("subsets S_p do not cover the semigroup", {});

  for (int p = 0; p < nblocks; ++p) {
    for (int q = p; q < nblocks; ++q) {
      const auto& bp = spec.blocks[static_cast<size_t>(p)];
      const auto& bq = spec.blocks[static_cast<size_t>(q)];
      const auto& targets = targets_of(spec, p, q);
      SubspaceQ allowed(c.dim());
      for (int r : targets) {
        if (r < 0 || r >= nblocks) throw InputError("resonance index set refers to a missing block");
        allowed = allowed + spec.blocks[static_cast<size_t>(r)].space;
      }
      if (!allowed.contains(bracket_span(c, bp.space, bq.space))) {
        violation("[V_p, V_q] is not contained in the sum over i(p,q)", {p + 1, q + 1});
      }
      const auto allowed_s = intersect_targets(targets, order, [&](int r) {
        return as_set(spec.blocks[static_cast<size_t>(r)].elements);
      });
      for (int a : bp.elements) {
        for (int b : bq.elements) {
          if (!allowed_s.count(s.at(a, b))) {
            violation("S_p S_q is not contained in the intersection over i(p,q)", {p + 1, q + 1, a + 1, b + 1});
          }
        }
      }
    }
  }

  if (!spec.has_partition()) return;
  for (int p = 0; p < nblocks; ++p) {
    const auto& b = spec.blocks[static_cast<size_t>(p)];
    std::set<int> parts = as_set(b.checked);
    for (int a : b.hatted) {
      if (!parts.insert(a).second) violation("partition parts overlap", {p + 1, a + 1});
    }
    if (parts != as_set(b.elements) || b.checked.size() + b.hatted.size() != b.elements.size()) {
      violation("partition does not split S_p", {p + 1});
    }
  }
  for (int p = 0; p < nblocks; ++p) {
    for (int q = 0; q < nblocks; ++q) {
      const auto allowed = intersect_targets(targets_of(spec, p, q), order, [&](int r) {
        return as_set(spec.blocks[static_cast<size_t>(r)].hatted);
      });
      for (int a : spec.blocks[static_cast<size_t>(p)].checked) {
        for (int b : spec.blocks[static_cast<size_t>(q)].hatted) {
          if (!allowed.count(s.at(a, b))) {
            violation("checked S_p times hatted S_q leaves the hatted intersection", {p + 1, q + 1, a + 1, b + 1});
          }
        }
      }
    }
  }
}

namespace {

struct ResonantLayout {
  MatrixQ basis;
  std::vector<bool> checked;  // per basis row
};

ResonantLayout layout(const SemigroupTable& s, const StructureTensorQ& c, const ResonanceSpec& spec) {
  std::vector<VectorQ> rows;
  std::vector<bool> checked;
  for (const auto& b : spec.blocks) {
    std::vector<int> elements = b.elements;
    std::sort(elements.begin(), elements.end());
    const auto checked_set = as_set(b.checked);
    for (int a : elements) {
      for (Eigen::Index r = 0; r < b.space.dim(); ++r) {
        rows.push_back(lift(b.space.vector(r), a, s.order()));
        checked.push_back(checked_set.count(a) > 0);
      }
    }
  }
  MatrixQ basis(static_cast<Eigen::Index>(rows.size()), c.dim() * s.order());
  for (size_t r = 0; r < rows.size(); ++r) basis.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
  return {basis, checked};
}

}  // namespace

MatrixQ resonant_basis(const SemigroupTable& s, const StructureTensorQ& c, const ResonanceSpec& spec) {
  return layout(s, c, spec).basis;
}

StructureTensorQ resonant_subalgebra(const SemigroupTable& s, const StructureTensorQ& c,
                                     const ResonanceSpec& spec) {
  validate_resonance(s, c, spec);
  try {
    return subalgebra_in_basis(s_expand(s, c), resonant_basis(s, c, spec));
  } catch (const Error& e) {
    if (e.code() != "not-closed") throw;
    throw Error("internal", "resonance conditions hold but G_R is not closed", e.witness());
  }
}

StructureTensorQ resonant_reduction(const SemigroupTable& s, const StructureTensorQ& c,
                                    const ResonanceSpec& spec) {
  if (!spec.has_partition()) throw InputError("resonant reduction needs a partition on every block");
  const auto resonant = resonant_subalgebra(s, c, spec);
  const auto lay = layout(s, c, spec);
  const Eigen::Index m = resonant.dim();
  std::vector<VectorQ> checked, hatted;
  for (Eigen::Index r = 0; r < m; ++r) {
    VectorQ unit = VectorQ::Zero(m);
    unit(r) = 1;
    (lay.checked[static_cast<size_t>(r)] ? checked : hatted).push_back(unit);
  }
  return reduce_decomposition(resonant, SubspaceQ::from_vectors(checked, m),
                              SubspaceQ::from_vectors(hatted, m));
}

StructureTensorQ reduce_decomposition(const StructureTensorQ& c, const SubspaceQ& checked,
                                      const SubspaceQ& hatted) {
  const Eigen::Index n = c.dim();
  if (checked.ambient() != n || hatted.ambient() != n || checked.dim() + hatted.dim() != n ||
      (checked + hatted).dim() != n) {
    throw Error("not-a-complement", "checked and hatted subspaces are not complementary");
  }
  for (Eigen::Index i = 0; i < checked.dim(); ++i) {
    const MatrixQ ad = c.ad_of(checked.vector(i));
    for (Eigen::Index j = 0; j < hatted.dim(); ++j) {
      if (!hatted.contains(VectorQ(ad * hatted.vector(j)))) {
        throw Error("reduction-condition-violated", "[checked, hatted] is not contained in hatted",
                    {static_cast<long>(i + 1), static_cast<long>(j + 1)});
      }
    }
  }
  MatrixQ combined(n, n);
  combined << checked.basis(), hatted.basis();
  const MatrixQ to_coords = *inverse<Rational>(MatrixQ(combined.transpose()));
  const Eigen::Index m = checked.dim();
  StructureTensorQ out(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const VectorQ coords = to_coords * c.bracket(checked.vector(i), checked.vector(j));
      out.set_bracket(i, j, coords.head(m));
    }
  }
  if (validate_lie(c).ok() && !validate_lie(out).ok()) {
    throw Error("internal", "reduced algebra fails the Jacobi identity");
  }
  return out;
}

StructureTensorQ subalgebra_in_basis(const StructureTensorQ& c, const MatrixQ& basis) {
  const Eigen::Index m = basis.rows();
  const auto span = SubspaceQ::from_rows(basis);
  if (span.dim() != m) throw Error("dependent-basis", "subalgebra generators are linearly dependent");
  MatrixQ t(m, m);  // basis = t * echelon
  for (Eigen::Index r = 0; r < m; ++r) t.row(r) = span.coordinates(basis.row(r).transpose())->transpose();
  const bool identity = t == MatrixQ::Identity(m, m);
  const MatrixQ convert = identity ? t : MatrixQ(inverse<Rational>(t)->transpose());

  StructureTensorQ out(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const VectorQ x = basis.row(i).transpose();
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const auto coords = span.coordinates(c.bracket(x, basis.row(j).transpose()));
      if (!coords) {
        throw Error("not-closed", "span is not closed under the bracket",
                    {static_cast<long>(i + 1), static_cast<long>(j + 1)});
      }
      out.set_bracket(i, j, identity ? *coords : VectorQ(convert * *coords));
    }
  }
  return out;
}

StructureTensorQ extract_subalgebra(const StructureTensorQ& c, const SubspaceQ& span) {
  return subalgebra_in_basis(c, span.basis());
}

}  // namespace liex
