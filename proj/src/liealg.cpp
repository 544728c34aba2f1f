#include "liex/liealg.hpp"

#include "liex/error.hpp"

#include <algorithm>

namespace liex {

LieReport validate_lie(const StructureTensorQ& c) {
  LieReport report;
  const Eigen::Index n = c.dim();
  for (Eigen::Index i = 0; i < n && !report.antisymmetry; ++i) {
    for (Eigen::Index j = i; j < n && !report.antisymmetry; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        if (c(i, j, k) != -c(j, i, k)) {
          report.antisymmetry = AntisymmetryWitness{{i, j, k}};
          break;
        }
      }
    }
  }
  for (Eigen::Index i = 0; i < n && !report.jacobi; ++i) {
    for (Eigen::Index j = i + 1; j < n && !report.jacobi; ++j) {
      for (Eigen::Index k = j + 1; k < n; ++k) {
        const VectorQ eij = c.bracket_basis(i, j);
        const VectorQ ejk = c.bracket_basis(j, k);
        const VectorQ eki = c.bracket_basis(k, i);
        // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
        VectorQ residual = c.ad(i) * ejk + c.ad(j) * eki + c.ad(k) * eij;
        if (!residual.isZero()) {
          report.jacobi = JacobiWitness{{i, j, k}, residual};
          break;
        }
      }
    }
  }
  return report;
}

void require_lie(const StructureTensorQ& c) {
  const auto report = validate_lie(c);
  if (report.antisymmetry) {
    const auto& w = report.antisymmetry->ijk;
    throw Error("not-antisymmetric", "structure constants are not antisymmetric",
                {w[0] + 1, w[1] + 1, w[2] + 1});
  }
  if (report.jacobi) {
    const auto& w = report.jacobi->ijk;
    throw Error("jacobi-violation", "structure constants violate the Jacobi identity",
                {w[0] + 1, w[1] + 1, w[2] + 1});
  }
}

VectorQ adjoint_traces(const StructureTensorQ& c) {
  VectorQ t(c.dim());
  for (Eigen::Index i = 0; i < c.dim(); ++i) t(i) = c.ad(i).trace();
  return t;
}

bool is_unimodular(const StructureTensorQ& c) { return adjoint_traces(c).isZero(); }

SubspaceQ bracket_span(const StructureTensorQ& c, const SubspaceQ& a, const SubspaceQ& b) {
  std::vector<VectorQ> gens;
  for (Eigen::Index r = 0; r < a.dim(); ++r) {
    const MatrixQ ad = c.ad_of(a.vector(r));
    for (Eigen::Index s = 0; s < b.dim(); ++s) gens.push_back(ad * b.vector(s));
  }
  return SubspaceQ::from_vectors(gens, c.dim());
}

SubspaceQ derived_algebra(const StructureTensorQ& c) {
  const auto g = SubspaceQ::whole(c.dim());
  return bracket_span(c, g, g);
}

std::vector<SubspaceQ> derived_series(const StructureTensorQ& c) {
  std::vector<SubspaceQ> series{SubspaceQ::whole(c.dim())};
  while (true) {
    auto next = bracket_span(c, series.back(), series.back());
    const bool stalled = next.dim() == series.back().dim();
    series.push_back(std::move(next));
    if (stalled || series.back().is_zero_space()) break;
  }
  return series;
}

std::vector<SubspaceQ> lower_central_series(const StructureTensorQ& c) {
  const auto g = SubspaceQ::whole(c.dim());
  std::vector<SubspaceQ> series{g};
  while (true) {
    auto next = bracket_span(c, g, series.back());
    const bool stalled = next.dim() == series.back().dim();
    series.push_back(std::move(next));
    if (stalled || series.back().is_zero_space()) break;
  }
  return series;
}

namespace {

std::optional<int> degree_of(const std::vector<SubspaceQ>& series) {
  for (size_t k = 0; k < series.size(); ++k) {
    if (series[k].is_zero_space()) return static_cast<int>(k);
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> solvability_degree(const StructureTensorQ& c) { return degree_of(derived_series(c)); }

std::optional<int> nilpotency_degree(const StructureTensorQ& c) {
  return degree_of(lower_central_series(c));
}

SubspaceQ center(const StructureTensorQ& c) {
  // z is central iff [z, e_j] = 0 for all j, i.e. sum_i z_i ad(i) e_j = 0.
  const Eigen::Index n = c.dim();
  MatrixQ system(n * n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) system(j * n + k, i) = c(i, j, k);
    }
  }
  return SubspaceQ::from_rows(null_space<Rational>(system).transpose());
}

Diagonalization congruence_diagonalize(const MatrixQ& q) {
  const Eigen::Index n = q.rows();
  MatrixQ a = q;
  MatrixQ p = MatrixQ::Identity(n, n);
  auto swap_both = [&](Eigen::Index i, Eigen::Index j) {
    a.row(i).swap(a.row(j));
    a.col(i).swap(a.col(j));
    p.row(i).swap(p.row(j));
  };
  for (Eigen::Index k = 0; k < n; ++k) {
    if (is_zero(a(k, k))) {
      Eigen::Index j = k + 1;
      while (j < n && is_zero(a(j, j))) ++j;
      if (j < n) {
        swap_both(k, j);
      } else {
        j = k + 1;
        while (j < n && is_zero(a(k, j))) ++j;
        if (j == n) continue;
        // a(k,k) = a(j,j) = 0, a(k,j) != 0: row/col k += row/col j gives 2 a(k,j)
        a.row(k) += a.row(j);
        a.col(k) += a.col(j);
        p.row(k) += p.row(j);
      }
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      const Rational f = a(i, k) / a(k, k);
      a.row(i) -= f * a.row(k);
      a.col(i) -= f * a.col(k);
      p.row(i) -= f * p.row(k);
    }
  }
  return {p, a.diagonal()};
}

Inertia inertia(const MatrixQ& symmetric) {
  const auto d = congruence_diagonalize(symmetric).diagonal;
  Inertia s;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (d(i) > 0) {
      ++s.positive;
    } else if (d(i) < 0) {
      ++s.negative;
    } else {
      ++s.zero;
    }
  }
  return s;
}

KillingForm killing_form(const StructureTensorQ& c) {
  const Eigen::Index n = c.dim();
  KillingForm k;
  k.matrix.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      k.matrix(i, j) = (c.ad(i) * c.ad(j)).trace();
      k.matrix(j, i) = k.matrix(i, j);
    }
  }
  k.rank = static_cast<int>(rank<Rational>(k.matrix));
  k.signature = inertia(k.matrix);
  return k;
}

std::vector<MatrixQ> derivation_algebra(const StructureTensorQ& c) {
  const Eigen::Index n = c.dim();
  auto var = [n](Eigen::Index row, Eigen::Index col) { return row * n + col; };
  MatrixQ system = MatrixQ::Zero(n * (n - 1) / 2 * n, n * n);
  Eigen::Index eq = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      for (Eigen::Index l = 0; l < n; ++l, ++eq) {
        // D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j], component l
        for (Eigen::Index k = 0; k < n; ++k) {
          if (!is_zero(c(i, j, k))) system(eq, var(l, k)) += c(i, j, k);
        }
        for (Eigen::Index m = 0; m < n; ++m) {
          if (!is_zero(c(m, j, l))) system(eq, var(m, i)) -= c(m, j, l);
          if (!is_zero(c(i, m, l))) system(eq, var(m, j)) -= c(i, m, l);
        }
      }
    }
  }
  const MatrixQ kernel = null_space<Rational>(system);
  std::vector<MatrixQ> basis;
  for (Eigen::Index col = 0; col < kernel.cols(); ++col) {
    MatrixQ d(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index s = 0; s < n; ++s) d(r, s) = kernel(var(r, s), col);
    }
    basis.push_back(std::move(d));
  }
  return basis;
}

namespace {

VectorQ flatten(const MatrixQ& m) {
  VectorQ v(m.size());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index s = 0; s < m.cols(); ++s) v(r * m.cols() + s) = m(r, s);
  }
  return v;
}

MatrixQ unflatten(const VectorQ& v, Eigen::Index n) {
  MatrixQ m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index s = 0; s < n; ++s) m(r, s) = v(r * n + s);
  }
  return m;
}

}  // namespace

bool is_nilpotent_matrix_algebra(const std::vector<MatrixQ>& basis) {
  if (basis.empty()) return true;
  const Eigen::Index n = basis.front().rows();
  std::vector<VectorQ> flat;
  for (const auto& m : basis) flat.push_back(flatten(m));
  const auto whole = SubspaceQ::from_vectors(flat, n * n);
  for (size_t a = 0; a < basis.size(); ++a) {
    for (size_t b = a + 1; b < basis.size(); ++b) {
      const MatrixQ comm = basis[a] * basis[b] - basis[b] * basis[a];
      if (!whole.contains(flatten(comm))) {
        throw Error("not-closed", "matrix span is not closed under the commutator",
                    {static_cast<long>(a + 1), static_cast<long>(b + 1)});
      }
    }
  }
  SubspaceQ term = whole;
  while (!term.is_zero_space()) {
    std::vector<VectorQ> gens;
    for (const auto& x : basis) {
      for (Eigen::Index r = 0; r < term.dim(); ++r) {
        const MatrixQ y = unflatten(term.vector(r), n);
        gens.push_back(flatten(x * y - y * x));
      }
    }
    auto next = SubspaceQ::from_vectors(gens, n * n);
    if (next.dim() == term.dim()) return false;
    term = std::move(next);
  }
  return true;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"3A1",  "A2.1+A1", "A3.1", "A3.2", "A3.3", "A3.4",
                                              "A3.5", "sl2R",    "so3",  "gF",   "gE"};
  return names;
}

StructureTensorQ tensor_from_terms(int dim, const std::vector<BracketTerm>& terms) {
  StructureTensorQ c(dim);
  for (const auto& t : terms) c.add(t.i - 1, t.j - 1, t.k - 1, t.coeff);
  return c;
}

namespace {

std::string normalize_name(std::string name) {
  if (name == "A3.4(a)" || name == "A3.4a") return "A3.4";
  if (name == "A3.5(b)" || name == "A3.5b") return "A3.5";
  if (name == "sl(2,R)" || name == "sl2") return "sl2R";
  if (name == "so(3)") return "so3";
  return name;
}

}  // namespace

StructureTensorQ catalog(const std::string& raw_name, std::optional<Rational> a,
                         std::optional<Rational> b) {
  const std::string name = normalize_name(raw_name);
  const bool known = std::find(catalog_names().begin(), catalog_names().end(), name) !=
                     catalog_names().end();
  if (!known) throw Error("unknown-name", "unknown algebra '" + raw_name + "'");
  if (a && name != "A3.4") throw Error("parameter-out-of-range", name + " takes no parameter a");
  if (b && name != "A3.5") throw Error("parameter-out-of-range", name + " takes no parameter b");

  using T = BracketTerm;
  const Rational one(1);
  if (name == "3A1") return StructureTensorQ(3);
  if (name == "A2.1+A1") return tensor_from_terms(3, {T{1, 2, 1, one}});
  if (name == "A3.1") return tensor_from_terms(3, {T{2, 3, 1, one}});
  if (name == "A3.2") return tensor_from_terms(3, {T{1, 3, 1, one}, T{2, 3, 1, one}, T{2, 3, 2, one}});
  if (name == "A3.3") return tensor_from_terms(3, {T{1, 3, 1, one}, T{2, 3, 2, one}});
  if (name == "A3.4") {
    if (!a) throw Error("parameter-out-of-range", "A3.4 requires a with 0 < |a| <= 1");
    if (*a == 0 || abs(*a) > 1) {
      throw Error("parameter-out-of-range", "A3.4 requires 0 < |a| <= 1, got " + to_string(*a));
    }
    return tensor_from_terms(3, {T{1, 3, 1, one}, T{2, 3, 2, *a}});
  }
  if (name == "A3.5") {
    if (!b) throw Error("parameter-out-of-range", "A3.5 requires b >= 0");
    if (*b < 0) throw Error("parameter-out-of-range", "A3.5 requires b >= 0, got " + to_string(*b));
    return tensor_from_terms(
        3, {T{1, 3, 1, *b}, T{1, 3, 2, -one}, T{2, 3, 1, one}, T{2, 3, 2, *b}});
  }
  if (name == "sl2R") {
    return tensor_from_terms(3, {T{1, 2, 1, one}, T{2, 3, 3, one}, T{1, 3, 2, Rational(2)}});
  }
  if (name == "so3") return tensor_from_terms(3, {T{1, 2, 3, one}, T{2, 3, 1, one}, T{3, 1, 2, one}});

  // [e_1, e_i] = e_{i+1}, 2 <= i <= 6
  std::vector<T> terms;
  for (int i = 2; i <= 6; ++i) terms.push_back(T{1, i, i + 1, one});
  if (name == "gF") {
    terms.insert(terms.end(), {T{2, 3, 6, one}, T{2, 4, 7, one}, T{2, 5, 7, one}, T{3, 4, 7, -one}});
  } else {
    terms.insert(terms.end(), {T{2, 3, 6, one}, T{2, 3, 7, one}, T{2, 4, 7, one}});
  }
  return tensor_from_terms(7, terms);
}

}  // namespace liex
