#include "liex/contraction.hpp"

#include "liex/error.hpp"
#include "liex/identify.hpp"
#include "liex/liealg.hpp"

#include <sstream>

namespace liex {

std::string to_string(const LaurentQ& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational m = abs(c);
    if (e == 0) {
      out += to_string(m);
      continue;
    }
    if (m != 1) out += to_string(m) + " ";
    out += "eps";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_string(const RationalFunctionQ& f) {
  if (f.is_laurent()) return to_string(f.numerator());
  return "(" + to_string(f.numerator()) + ") / (" + to_string(f.denominator()) + ")";
}

LaurentBasisFamily LaurentBasisFamily::identity(Eigen::Index n) {
  return {Matrix<LaurentQ>::Identity(n, n)};
}

LaurentBasisFamily LaurentBasisFamily::constant(const MatrixQ& u) {
  return {u.unaryExpr([](const Rational& q) { return LaurentQ(q); })};
}

LaurentBasisFamily LaurentBasisFamily::diagonal(const std::vector<int>& exponents) {
  const auto n = static_cast<Eigen::Index>(exponents.size());
  Matrix<LaurentQ> m = Matrix<LaurentQ>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = LaurentQ::monomial(1, exponents[static_cast<size_t>(i)]);
  return {m};
}

LaurentTensor transform_parametric(const StructureTensorQ& c, const LaurentBasisFamily& u) {
  if (u.dim() != c.dim() || u.entries.cols() != c.dim()) {
    throw Error("dimension-mismatch", "family is " + std::to_string(u.dim()) + "x" +
                                          std::to_string(u.entries.cols()) + ", algebra has dimension " +
                                          std::to_string(c.dim()));
  }
  const Matrix<RationalFunctionQ> m =
      u.entries.unaryExpr([](const LaurentQ& p) { return RationalFunctionQ(p); });
  const auto inv = inverse<RationalFunctionQ>(m);
  if (!inv) throw Error("singular-family", "determinant of the family is identically zero");
  return change_basis(c.cast<RationalFunctionQ>(), m, *inv);
}

LimitResult limit(const LaurentTensor& lt) {
  const Eigen::Index n = lt.dim();
  StructureTensorQ out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        const auto value = lt(i, j, k).value_at_zero();
        if (!value) return {std::nullopt, Divergence{i, j, k, *lt(i, j, k).valuation()}};
        out(i, j, k) = *value;
      }
    }
  }
  const auto report = validate_lie(out);
  if (!report.ok()) throw Error("internal", "limit of Lie brackets is not a Lie bracket");
  return {out, std::nullopt};
}

std::optional<int> min_valuation(const LaurentTensor& lt) {
  std::optional<int> best;
  const Eigen::Index n = lt.dim();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        const auto v = lt(i, j, k).valuation();
        if (v && (!best || *v < *best)) best = v;
      }
    }
  }
  return best;
}

ContractionReport verify_contraction(const StructureTensorQ& source, const LaurentBasisFamily& u,
                                     const std::string& target, std::optional<Rational> a,
                                     std::optional<Rational> b, const std::optional<MatrixQ>& post) {
  const auto lim = limit(transform_parametric(source, u));
  if (!lim.converges()) {
    const auto& d = *lim.divergence;
    throw Error("divergent-limit", "entry diverges as eps -> 0",
                {static_cast<long>(d.i + 1), static_cast<long>(d.j + 1), static_cast<long>(d.k + 1), d.valuation});
  }
  ContractionReport report;
  report.limit = *lim.tensor;
  const StructureTensorQ expected = catalog(target, a, b);
  if (source.dim() == 3) {
    const auto got = identify3(report.limit);
    report.limit_class = describe(got);
    const auto want = identify3(expected);
    report.holds = got.label == want.label && got.a == want.a && got.b == want.b;
    return report;
  }
  const StructureTensorQ compared = post ? change_basis(report.limit, *post) : report.limit;
  report.holds = compared == expected;
  return report;
}

LaurentBasisFamily builtin_family(const std::string& name) {
  if (name == "uF") {
    // Printed with the new basis vectors as columns; stored transposed.
    Matrix<LaurentQ> m = Matrix<LaurentQ>::Zero(7, 7);
    const Rational half(1, 2);
    m(0, 0) = LaurentQ::monomial(1, 1);
    m(1, 1) = LaurentQ::monomial(1, 3);
    m(2, 2) = LaurentQ::monomial(1, 4);
    for (int i = 3; i < 7; ++i) {
      m(i, i) = LaurentQ::monomial(1, i + 2);
      m(i - 2, i) = LaurentQ::monomial(half, i + 1);
    }
    return {m};
  }
  if (name.rfind("identity:", 0) == 0) {
    try {
      return LaurentBasisFamily::identity(std::stoi(name.substr(9)));
    } catch (const std::logic_error&) {
      throw Error("unknown-family", "bad identity family: " + name);
    }
  }
  if (name.rfind("diag:", 0) == 0) {
    std::vector<int> exps;
    std::stringstream ss(name.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        exps.push_back(std::stoi(item));
      } catch (const std::logic_error&) {
        throw Error("unknown-family", "bad exponent in " + name);
      }
    }
    if (exps.empty()) throw Error("unknown-family", "empty diagonal family");
    return LaurentBasisFamily::diagonal(exps);
  }
  throw Error("unknown-family", "no built-in family named " + name);
}

}  // namespace liex
