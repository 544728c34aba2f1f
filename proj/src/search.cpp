#include "liex/search.hpp"

#include "liex/error.hpp"
#include "liex/liealg.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace liex {

std::string to_string(SearchMode m) {
  switch (m) {
    case SearchMode::subalgebra:
      return "subalgebra";
    case SearchMode::zero_reduce:
      return "zero_reduce";
    case SearchMode::resonant:
      return "resonant";
  }
  return "?";
}

SearchMode parse_search_mode(const std::string& text) {
  if (text == "subalgebra") return SearchMode::subalgebra;
  if (text == "zero_reduce" || text == "zero-reduce") return SearchMode::zero_reduce;
  if (text == "resonant") return SearchMode::resonant;
  throw InputError("unknown search mode '" + text + "'");
}

const std::set<SearchMode>& all_search_modes() {
  static const std::set<SearchMode> modes{SearchMode::subalgebra, SearchMode::zero_reduce, SearchMode::resonant};
  return modes;
}

std::string Witness::class_name() const { return describe({label, a, b, {}}); }

VectorQ relabel_expanded(const VectorQ& v, const std::vector<int>& perm, int order) {
  VectorQ out = VectorQ::Zero(v.size());
  for (Eigen::Index f = 0; f < v.size(); ++f) {
    const auto idx = ExpandedBasisIndex::from_flat(static_cast<int>(f), order);
    out(ExpandedBasisIndex{idx.i, perm[static_cast<size_t>(idx.alpha)]}.flat(order)) = v(f);
  }
  return out;
}

StructureTensorQ witness_ambient(const StructureTensorQ& source, const Witness& w) {
  switch (w.mode) {
    case SearchMode::subalgebra:
      return s_expand(w.semigroup, source);
    case SearchMode::zero_reduce:
      return zero_reduce(w.semigroup, source);
    case SearchMode::resonant:
      if (!w.resonance) throw InputError("resonant witness without resonance data");
      return w.reduced ? resonant_reduction(w.semigroup, source, *w.resonance)
                       : resonant_subalgebra(w.semigroup, source, *w.resonance);
  }
  throw Error("internal", "unknown search mode");
}

bool replay_witness(const StructureTensorQ& source, const Witness& w) {
  const auto ambient = witness_ambient(source, w);
  try {
    return subalgebra_in_basis(ambient, w.basis) == catalog(w.label, w.a, w.b);
  } catch (const Error&) {
    return false;
  }
}

namespace {

using Mask = std::uint64_t;

Mask support(const VectorQ& v) {
  Mask m = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!is_zero(v(i))) m |= Mask{1} << i;
  }
  return m;
}

// Class of a 3-dim algebra, or nullopt when it has no rational canonical form.
std::optional<Identification> try_identify(const StructureTensorQ& c) {
  try {
    return identify3(c);
  } catch (const Error& e) {
    if (e.code() == "parameter-not-rational" || e.code() == "no-rational-witness") return std::nullopt;
    throw;
  }
}

struct Found {
  SubspaceQ span;
  MatrixQ basis;
  Identification id;
};

// Each generator e_a or e_a - e_b is an edge of a graph on the basis indices
// plus a ground vertex n (e_a joins a to ground). Three generators are
// independent iff their edges form a forest, and the span is fixed by the
// components: free coordinates on the grounded component, zero-sum
// coordinates on every other one.
class EdgeSpan {
 public:
  explicit EdgeSpan(int n) : parent_(static_cast<size_t>(n + 1)) {}

  // False if the edges contain a cycle.
  bool build(const std::array<std::pair<int, int>, 3>& edges) {
    std::iota(parent_.begin(), parent_.end(), 0);
    for (const auto& [a, b] : edges) {
      const int ra = find(a), rb = find(b);
      if (ra == rb) return false;
      parent_[static_cast<size_t>(std::max(ra, rb))] = std::min(ra, rb);
    }
    const int ground = static_cast<int>(parent_.size()) - 1;
    key_.assign(parent_.size(), 0);
    std::vector<int> size(parent_.size(), 0);
    for (int v = 0; v <= ground; ++v) ++size[static_cast<size_t>(find(v))];
    active_ = 0;
    for (int v = 0; v < ground; ++v) {
      const int r = find(v);
      key_[static_cast<size_t>(v)] = r;
      if (size[static_cast<size_t>(r)] > 1) active_ |= Mask{1} << v;
    }
    ground_root_ = find(ground);
    key_[static_cast<size_t>(ground)] = ground_root_;
    return true;
  }

  bool contains(const VectorQ& v, Mask support, std::vector<Rational>& sums) {
    if (support & ~active_) return false;
    std::vector<int> touched;
    for (int i = 0; support >> i; ++i) {
      if (!((support >> i) & 1U)) continue;
      const int r = key_[static_cast<size_t>(i)];
      if (r == ground_root_) continue;
      if (is_zero(sums[static_cast<size_t>(r)])) touched.push_back(r);
      sums[static_cast<size_t>(r)] += v(i);
      if (is_zero(sums[static_cast<size_t>(r)])) touched.push_back(r);
    }
    bool ok = true;
    for (int r : touched) {
      if (!is_zero(sums[static_cast<size_t>(r)])) ok = false;
      sums[static_cast<size_t>(r)] = 0;
    }
    return ok;
  }

  const std::vector<int>& key() const { return key_; }

 private:
  int find(int v) {
    while (parent_[static_cast<size_t>(v)] != v) v = parent_[static_cast<size_t>(v)];
    return v;
  }

  std::vector<int> parent_;
  std::vector<int> key_;
  Mask active_ = 0;
  int ground_root_ = 0;
};

std::string tensor_key(const StructureTensorQ& c) {
  std::string key;
  for (Eigen::Index i = 0; i < c.dim(); ++i) {
    for (Eigen::Index j = i + 1; j < c.dim(); ++j) {
      for (Eigen::Index k = 0; k < c.dim(); ++k) key += to_string(c(i, j, k)) + ",";
    }
  }
  return key;
}

// Closed 3-dim spans of triples drawn from basis vectors and differences.
std::vector<Found> subalgebras_of(const StructureTensorQ& amb, long& candidates) {
  const Eigen::Index n = amb.dim();
  std::vector<Found> out;
  if (n < 3) return out;
  if (n > 63) throw Error("bound-exceeded", "ambient dimension above 63", {static_cast<long>(n)});
  const int ground = static_cast<int>(n);

  struct Generator {
    VectorQ v;
    std::pair<int, int> edge;
  };
  std::vector<Generator> gens;
  for (int a = 0; a < ground; ++a) {
    VectorQ v = VectorQ::Zero(n);
    v(a) = 1;
    gens.push_back({v, {a, ground}});
  }
  for (int a = 0; a < ground; ++a) {
    for (int b = a + 1; b < ground; ++b) {
      VectorQ v = VectorQ::Zero(n);
      v(a) = 1;
      v(b) = -1;
      gens.push_back({v, {a, b}});
    }
  }
  const size_t g = gens.size();

  auto terms = [&](const Generator& gen) {
    std::vector<std::pair<int, int>> t{{gen.edge.first, 1}};
    if (gen.edge.second != ground) t.emplace_back(gen.edge.second, -1);
    return t;
  };
  std::vector<VectorQ> brackets(g * g);
  std::vector<Mask> bracket_masks(g * g, 0);
  for (size_t x = 0; x < g; ++x) {
    for (size_t y = x + 1; y < g; ++y) {
      VectorQ v = VectorQ::Zero(n);
      for (const auto& [a, sa] : terms(gens[x])) {
        for (const auto& [b, sb] : terms(gens[y])) {
          if (sa * sb > 0) v += amb.ad(a).col(b);
          else v -= amb.ad(a).col(b);
        }
      }
      bracket_masks[x * g + y] = support(v);
      brackets[x * g + y] = std::move(v);
    }
  }

  EdgeSpan span(ground);
  std::vector<Rational> sums(static_cast<size_t>(n + 1));
  std::set<std::vector<int>> seen;
  std::map<std::string, std::optional<Identification>> classes;
  for (size_t x = 0; x < g; ++x) {
    for (size_t y = x + 1; y < g; ++y) {
      for (size_t z = y + 1; z < g; ++z) {
        ++candidates;
        if (!span.build({gens[x].edge, gens[y].edge, gens[z].edge})) continue;
        const size_t pairs[3] = {x * g + y, x * g + z, y * g + z};
        bool closed = true;
        for (size_t p : pairs) {
          if (bracket_masks[p] && !span.contains(brackets[p], bracket_masks[p], sums)) {
            closed = false;
            break;
          }
        }
        if (!closed || !seen.insert(span.key()).second) continue;
        const auto sub = SubspaceQ::from_vectors({gens[x].v, gens[y].v, gens[z].v}, n);
        const auto restricted = extract_subalgebra(amb, sub);
        auto [it, fresh] = classes.try_emplace(tensor_key(restricted));
        if (fresh) it->second = try_identify(restricted);
        if (!it->second) continue;
        out.push_back({sub, MatrixQ(it->second->witness * sub.basis()), *it->second});
      }
    }
  }
  return out;
}

Witness make_witness(const SemigroupTable& s, SearchMode mode, Found f) {
  Witness w;
  w.semigroup = s;
  w.mode = mode;
  w.span = std::move(f.span);
  w.basis = std::move(f.basis);
  w.label = f.id.label;
  w.a = f.id.a;
  w.b = f.id.b;
  return w;
}

// Set partitions of {0..n-1} as block lists, in restricted-growth order.
std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> rgs(static_cast<size_t>(n), 0);
  while (true) {
    const int nb = n == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(static_cast<size_t>(nb));
    for (int i = 0; i < n; ++i) blocks[static_cast<size_t>(rgs[static_cast<size_t>(i)])].push_back(i);
    out.push_back(std::move(blocks));
    // next restricted growth string
    int i = n - 1;
    for (; i > 0; --i) {
      const int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[static_cast<size_t>(i)] <= prefix_max) {
        ++rgs[static_cast<size_t>(i)];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
    }
    if (i <= 0) break;
  }
  return out;
}

std::vector<int> bits_of(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; mask >> i; ++i) {
    if ((mask >> i) & 1U) out.push_back(i);
  }
  return out;
}

void resonant_search(const SemigroupTable& s, const StructureTensorQ& c, std::vector<Witness>& out,
                     long& candidates) {
  const int n = static_cast<int>(c.dim());
  const int order = s.order();
  const unsigned full = (1U << order) - 1;

  for (const auto& partition : set_partitions(n)) {
    const int k = static_cast<int>(partition.size());
    std::vector<SubspaceQ> spaces;
    std::vector<unsigned> basis_masks;
    for (const auto& block : partition) {
      std::vector<VectorQ> units;
      unsigned m = 0;
      for (int i : block) {
        VectorQ v = VectorQ::Zero(n);
        v(i) = 1;
        units.push_back(v);
        m |= 1U << i;
      }
      spaces.push_back(SubspaceQ::from_vectors(units, n));
      basis_masks.push_back(m);
    }
    // minimal i(p, q): blocks met by [V_p, V_q]
    std::map<std::pair<int, int>, std::vector<int>> targets;
    for (int p = 0; p < k; ++p) {
      for (int q = p; q < k; ++q) {
        Mask touched = 0;
        for (int i : partition[static_cast<size_t>(p)]) {
          for (int j : partition[static_cast<size_t>(q)]) touched |= support(c.bracket_basis(i, j));
        }
        std::vector<int> rs;
        for (int r = 0; r < k; ++r) {
          if (touched & basis_masks[static_cast<size_t>(r)]) rs.push_back(r);
        }
        if (!rs.empty()) targets[{p, q}] = rs;
      }
    }

    std::vector<unsigned> subsets(static_cast<size_t>(k), 1);
    while (true) {
      unsigned covered = 0;
      for (unsigned m : subsets) covered |= m;
      bool ok = covered == full;
      for (const auto& [pq, rs] : targets) {
        if (!ok) break;
        unsigned allowed = full;
        for (int r : rs) allowed &= subsets[static_cast<size_t>(r)];
        for (int a : bits_of(subsets[static_cast<size_t>(pq.first)])) {
          for (int b : bits_of(subsets[static_cast<size_t>(pq.second)])) {
            if (!((allowed >> s.at(a, b)) & 1U)) ok = false;
          }
        }
      }
      if (ok) {
        ++candidates;
        ResonanceSpec spec;
        spec.targets = targets;
        int gr_dim = 0;
        for (int p = 0; p < k; ++p) {
          spec.blocks.push_back({spaces[static_cast<size_t>(p)], bits_of(subsets[static_cast<size_t>(p)]), {}, {}});
          gr_dim += std::popcount(subsets[static_cast<size_t>(p)]) * static_cast<int>(partition[static_cast<size_t>(p)].size());
        }
        if (gr_dim == 3) {
          if (auto id = try_identify(resonant_subalgebra(s, c, spec))) {
            Witness w = make_witness(s, SearchMode::resonant, {SubspaceQ::whole(3), id->witness, *id});
            w.resonance = spec;
            out.push_back(std::move(w));
          }
        } else if (gr_dim > 3) {
          // reductions: choose the checked part of every S_p
          std::vector<unsigned> checked(static_cast<size_t>(k), 0);
          while (true) {
            int dim = 0;
            bool proper = false;
            for (int p = 0; p < k; ++p) {
              dim += std::popcount(checked[static_cast<size_t>(p)]) * static_cast<int>(partition[static_cast<size_t>(p)].size());
              if (checked[static_cast<size_t>(p)] != subsets[static_cast<size_t>(p)]) proper = true;
            }
            if (dim == 3 && proper) {
              ++candidates;
              ResonanceSpec rspec = spec;
              for (int p = 0; p < k; ++p) {
                auto& blk = rspec.blocks[static_cast<size_t>(p)];
                blk.checked = bits_of(checked[static_cast<size_t>(p)]);
                blk.hatted = bits_of(subsets[static_cast<size_t>(p)] & ~checked[static_cast<size_t>(p)]);
              }
              try {
                if (auto id = try_identify(resonant_reduction(s, c, rspec))) {
                  Witness w = make_witness(s, SearchMode::resonant, {SubspaceQ::whole(3), id->witness, *id});
                  w.resonance = rspec;
                  w.reduced = true;
                  out.push_back(std::move(w));
                }
              } catch (const Error& e) {
                if (e.code() != "resonance-violation" && e.code() != "reduction-condition-violated") throw;
              }
            }
            // next tuple of submasks
            int p = 0;
            for (; p < k; ++p) {
              auto& cm = checked[static_cast<size_t>(p)];
              const unsigned sm = subsets[static_cast<size_t>(p)];
              if (cm == sm) {
                cm = 0;
                continue;
              }
              cm = (cm - sm) & sm;  // next submask in increasing order
              break;
            }
            if (p == k) break;
          }
        }
      }
      int p = 0;
      for (; p < k; ++p) {
        if (subsets[static_cast<size_t>(p)] < full) {
          ++subsets[static_cast<size_t>(p)];
          break;
        }
        subsets[static_cast<size_t>(p)] = 1;
      }
      if (p == k) break;
    }
  }
}

bool matches(const Witness& w, const std::string& label, const std::optional<Rational>& a,
             const std::optional<Rational>& b) {
  if (w.label != label) return false;
  if (a && w.a != a) return false;
  if (b && w.b != b) return false;
  return true;
}

}  // namespace

Exploration explore(const StructureTensorQ& source, int max_order, const std::set<SearchMode>& modes, int bound) {
  require_lie(source);
  if (max_order < 1) throw InputError("max order must be positive");
  Exploration result;
  for (int order = 1; order <= max_order; ++order) {
    for (const auto& s : enumerate_abelian_semigroups(order, true, bound)) {
      ++result.space.semigroups;
      if (modes.count(SearchMode::subalgebra)) {
        for (auto& f : subalgebras_of(s_expand(s, source), result.space.subalgebra_candidates)) {
          result.witnesses.push_back(make_witness(s, SearchMode::subalgebra, std::move(f)));
        }
      }
      if (modes.count(SearchMode::zero_reduce) && zero_element(s)) {
        const auto reduced = zero_reduce(s, source);
        if (reduced.dim() == 3) {
          ++result.space.zero_reduce_candidates;
          if (auto id = try_identify(reduced)) {
            result.witnesses.push_back(
                make_witness(s, SearchMode::zero_reduce, {SubspaceQ::whole(3), id->witness, *id}));
          }
        } else {
          for (auto& f : subalgebras_of(reduced, result.space.zero_reduce_candidates)) {
            result.witnesses.push_back(make_witness(s, SearchMode::zero_reduce, std::move(f)));
          }
        }
      }
      if (modes.count(SearchMode::resonant)) {
        resonant_search(s, source, result.witnesses, result.space.resonant_candidates);
      }
    }
  }
  return result;
}

SearchResult find_connection(const StructureTensorQ& source, const std::string& target, std::optional<Rational> a,
                             std::optional<Rational> b, int max_order, const std::set<SearchMode>& modes,
                             int bound) {
  const auto& names = catalog_names();
  if (std::find(names.begin(), names.end(), target) == names.end()) {
    throw Error("unknown-name", "no catalog entry named " + target);
  }
  auto all = explore(source, max_order, modes, bound);
  SearchResult out;
  out.space = all.space;
  for (auto& w : all.witnesses) {
    if (!matches(w, target, a, b)) continue;
    if (!replay_witness(source, w)) throw Error("internal", "search produced a witness that does not replay");
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

std::string ClassLabel::display() const { return describe({name, a, b, {}}); }

std::vector<ClassLabel> parse_labels(const std::string& text) {
  std::vector<ClassLabel> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty()) continue;
    if (item == "all3") {
      const std::vector<ClassLabel> all{{"3A1", {}, {}},
                                        {"A2.1+A1", {}, {}},
                                        {"A3.1", {}, {}},
                                        {"A3.2", {}, {}},
                                        {"A3.3", {}, {}},
                                        {"A3.4", Rational(-1), {}},
                                        {"A3.4", Rational(1, 2), {}},
                                        {"A3.5", {}, Rational(0)},
                                        {"A3.5", {}, Rational(1)},
                                        {"sl2R", {}, {}},
                                        {"so3", {}, {}}};
      out.insert(out.end(), all.begin(), all.end());
      continue;
    }
    ClassLabel l;
    const auto open = item.find('(');
    l.name = item.substr(0, open);
    if (open != std::string::npos) {
      const auto close = item.find(')', open);
      if (close == std::string::npos || close < open + 3 || item[open + 2] != '=') {
        throw InputError("malformed label '" + item + "'");
      }
      const char which = item[open + 1];
      const Rational value = parse_rational(item.substr(open + 3, close - open - 3));
      if (which == 'a') l.a = value;
      else if (which == 'b') l.b = value;
      else throw InputError("malformed label '" + item + "'");
    }
    catalog(l.name, l.a, l.b);
    out.push_back(l);
  }
  if (out.empty()) throw InputError("no labels given");
  return out;
}

ConnectivityReport connectivity_matrix(const std::vector<ClassLabel>& labels, int max_order,
                                       const std::set<SearchMode>& modes, int bound) {
  ConnectivityReport report;
  report.labels = labels;
  for (size_t i = 0; i < labels.size(); ++i) {
    const auto& from = labels[i];
    const auto found = explore(catalog(from.name, from.a, from.b), max_order, modes, bound);
    report.spaces.push_back(found.space);
    for (size_t j = 0; j < labels.size(); ++j) {
      const auto& to = labels[j];
      Edge e{static_cast<int>(i), static_cast<int>(j), std::nullopt};
      for (const auto& w : found.witnesses) {
        if (w.label == to.name && w.a == to.a && w.b == to.b) {
          if (!replay_witness(catalog(from.name, from.a, from.b), w)) {
            throw Error("internal", "search produced a witness that does not replay");
          }
          e.witness = w;
          break;
        }
      }
      report.edges.push_back(std::move(e));
    }
  }
  return report;
}

std::string to_dot(const ConnectivityReport& report) {
  std::ostringstream out;
  out << "digraph sexpansions {\n";
  for (size_t i = 0; i < report.labels.size(); ++i) {
    out << "  n" << i << " [label=\"" << report.labels[i].display() << "\"];\n";
  }
  for (const auto& e : report.edges) {
    if (e.from == e.to || !e.witness) continue;
    out << "  n" << e.from << " -> n" << e.to << " [style=solid, label=\"|S|=" << e.witness->semigroup.order()
        << " " << to_string(e.witness->mode) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace liex
