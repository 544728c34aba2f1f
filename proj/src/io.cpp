#include "liex/io.hpp"

#include "liex/error.hpp"

#include <cctype>
#include <map>
#include <set>
#include <utility>

namespace liex {

namespace {

int index_from_json(const Json& j, const char* what, int n) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  const int v = j.get<int>();
  if (v < 1 || v > n) throw InputError(std::string(what) + " out of range: " + std::to_string(v));
  return v - 1;
}

int index_from_key(const std::string& key, int n) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(key, &used);
  } catch (const std::logic_error&) {
    throw InputError("bad index '" + key + "'");
  }
  if (used != key.size() || v < 1 || v > n) throw InputError("bad index '" + key + "'");
  return v - 1;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InputError("rational must be a \"p/q\" string or an integer");
}

Json tensor_to_json(const StructureTensorQ& c) {
  const Eigen::Index n = c.dim();
  Json brackets = Json::array();
  auto emit = [&](Eigen::Index i, Eigen::Index j) {
    Json coeffs = Json::object();
    for (Eigen::Index k = 0; k < n; ++k) {
      if (!is_zero(c(i, j, k))) coeffs[std::to_string(k + 1)] = rational_to_json(c(i, j, k));
    }
    brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs}});
  };
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!c.bracket_basis(i, i).isZero()) emit(i, i);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const VectorQ ij = c.bracket_basis(i, j);
      if (ij == VectorQ(-c.bracket_basis(j, i))) {
        if (!ij.isZero()) emit(i, j);
      } else {
        emit(i, j);
        emit(j, i);
      }
    }
  }
  return {{"dim", n}, {"brackets", brackets}};
}

StructureTensorQ tensor_from_json(const Json& j) {
  const Json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<int>() < 0) throw InputError("dim must be a nonnegative integer");
  const int n = dim.get<int>();
  StructureTensorQ c(n);
  if (!j.contains("brackets")) return c;
  const Json& list = j.at("brackets");
  if (!list.is_array()) throw InputError("brackets must be an array");
  std::map<std::pair<int, int>, VectorQ> given;
  for (const auto& b : list) {
    const int i = index_from_json(field(b, "i"), "i", n);
    const int jj = index_from_json(field(b, "j"), "j", n);
    const Json& coeffs = field(b, "coeffs");
    if (!coeffs.is_object()) throw InputError("coeffs must be an object");
    auto [it, fresh] = given.try_emplace({i, jj}, VectorQ::Zero(n));
    for (const auto& [key, value] : coeffs.items()) it->second(index_from_key(key, n)) += rational_from_json(value);
  }
  for (const auto& [ij, v] : given) {
    const auto [i, jj] = ij;
    for (int k = 0; k < n; ++k) c(i, jj, k) = v(k);
    if (i != jj && !given.count({jj, i})) {
      for (int k = 0; k < n; ++k) c(jj, i, k) = -v(k);
    }
  }
  return c;
}

Json semigroup_to_json(const SemigroupTable& s) {
  Json table = Json::array();
  for (const auto& row : s.rows()) {
    Json r = Json::array();
    for (int v : row) r.push_back(v + 1);
    table.push_back(r);
  }
  return {{"order", s.order()}, {"table", table}};
}

SemigroupTable semigroup_from_json(const Json& j) {
  const Json& table = field(j, "table");
  if (!table.is_array()) throw InputError("table must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& r : table) {
    if (!r.is_array()) throw InputError("table rows must be arrays");
    std::vector<int> row;
    for (const auto& v : r) {
      if (!v.is_number_integer()) throw InputError("table entries must be integers");
      row.push_back(v.get<int>() - 1);
    }
    rows.push_back(std::move(row));
  }
  if (j.contains("order") && (!j.at("order").is_number_integer() ||
                              j.at("order").get<size_t>() != rows.size())) {
    throw InputError("order does not match the table");
  }
  return SemigroupTable(std::move(rows));
}

Json matrix_to_json(const MatrixQ& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

MatrixQ matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) throw InputError("matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  MatrixQ m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j.at(static_cast<size_t>(r));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw InputError("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = rational_from_json(row.at(static_cast<size_t>(c)));
  }
  return m;
}

Json vector_to_json(const VectorQ& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v(i)));
  return out;
}

Json family_to_json(const LaurentBasisFamily& u) {
  Json entries = Json::object();
  for (Eigen::Index i = 0; i < u.dim(); ++i) {
    for (Eigen::Index j = 0; j < u.entries.cols(); ++j) {
      const auto& p = u.entries(i, j);
      if (p.is_zero()) continue;
      Json terms = Json::object();
      for (const auto& [e, c] : p.terms()) terms[std::to_string(e)] = rational_to_json(c);
      entries[std::to_string(i + 1) + "," + std::to_string(j + 1)] = terms;
    }
  }
  return {{"dim", u.dim()}, {"entries", entries}};
}

LaurentBasisFamily family_from_json(const Json& j) {
  const Json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<int>() < 1) throw InputError("dim must be a positive integer");
  const int n = dim.get<int>();
  LaurentBasisFamily u{Matrix<LaurentQ>::Zero(n, n)};
  const Json& entries = field(j, "entries");
  if (!entries.is_object()) throw InputError("entries must be an object");
  for (const auto& [key, terms] : entries.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw InputError("entry key must be \"i,j\": " + key);
    const int i = index_from_key(key.substr(0, comma), n);
    const int jj = index_from_key(key.substr(comma + 1), n);
    if (!terms.is_object()) throw InputError("entry must map exponents to coefficients");
    LaurentQ p;
    for (const auto& [exp, coef] : terms.items()) {
      size_t used = 0;
      int e = 0;
      try {
        e = std::stoi(exp, &used);
      } catch (const std::logic_error&) {
        throw InputError("bad exponent '" + exp + "'");
      }
      if (used != exp.size()) throw InputError("bad exponent '" + exp + "'");
      p += LaurentQ::monomial(rational_from_json(coef), e);
    }
    u.entries(i, jj) = p;
  }
  return u;
}

Json laurent_tensor_to_json(const LaurentTensor& t) {
  Json brackets = Json::array();
  for (Eigen::Index i = 0; i < t.dim(); ++i) {
    for (Eigen::Index j = i + 1; j < t.dim(); ++j) {
      Json coeffs = Json::object();
      for (Eigen::Index k = 0; k < t.dim(); ++k) {
        if (!t(i, j, k).is_zero()) coeffs[std::to_string(k + 1)] = to_string(t(i, j, k));
      }
      if (!coeffs.empty()) brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs}});
    }
  }
  return {{"dim", t.dim()}, {"brackets", brackets}};
}

Json identification_to_json(const Identification& id) {
  Json out{{"class", id.label}};
  if (id.a) out["a"] = rational_to_json(*id.a);
  if (id.b) out["b"] = rational_to_json(*id.b);
  out["witness"] = matrix_to_json(id.witness);
  return out;
}

Json witness_to_json(const Witness& w) {
  Json out{{"semigroup", semigroup_to_json(w.semigroup)}, {"mode", to_string(w.mode)}, {"class", w.label}};
  if (w.a) out["a"] = rational_to_json(*w.a);
  if (w.b) out["b"] = rational_to_json(*w.b);
  out["span"] = matrix_to_json(w.span.basis());
  out["basis"] = matrix_to_json(w.basis);
  if (w.resonance) {
    Json blocks = Json::array();
    for (const auto& b : w.resonance->blocks) {
      auto one_based = [](const std::vector<int>& v) {
        Json a = Json::array();
        for (int x : v) a.push_back(x + 1);
        return a;
      };
      Json blk{{"space", matrix_to_json(b.space.basis())}, {"elements", one_based(b.elements)}};
      if (w.reduced) {
        blk["checked"] = one_based(b.checked);
        blk["hatted"] = one_based(b.hatted);
      }
      blocks.push_back(blk);
    }
    out["resonance"] = {{"blocks", blocks}, {"reduced", w.reduced}};
  }
  return out;
}

Json space_to_json(const SpaceSize& s) {
  return {{"semigroups", s.semigroups},
          {"subalgebra_candidates", s.subalgebra_candidates},
          {"zero_reduce_candidates", s.zero_reduce_candidates},
          {"resonant_candidates", s.resonant_candidates},
          {"total", s.total()}};
}

MatrixQ parse_span(const std::string& text, Eigen::Index n) {
  std::vector<VectorQ> rows;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    VectorQ v = VectorQ::Zero(n);
    bool any = false;
    skip_ws();
    while (pos < text.size() && text[pos] != ',') {
      Rational sign(1);
      if (text[pos] == '+' || text[pos] == '-') {
        if (text[pos] == '-') sign = -1;
        ++pos;
        skip_ws();
      } else if (any) {
        throw InputError("expected + or - in span term at position " + std::to_string(pos));
      }
      const size_t coeff_start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
      const Rational coeff = pos > coeff_start ? parse_rational(text.substr(coeff_start, pos - coeff_start)) : Rational(1);
      skip_ws();
      if (pos >= text.size() || (text[pos] != 'E' && text[pos] != 'e')) {
        throw InputError("expected E<index> in span at position " + std::to_string(pos));
      }
      ++pos;
      const size_t idx_start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == idx_start) throw InputError("missing index after E in span");
      const long idx = std::stol(text.substr(idx_start, pos - idx_start));
      if (idx < 1 || idx > n) throw InputError("span index E" + std::to_string(idx) + " out of range");
      v(idx - 1) += sign * coeff;
      any = true;
      skip_ws();
    }
    if (!any) throw InputError("empty vector in span");
    rows.push_back(v);
    if (pos >= text.size()) break;
    ++pos;  // comma
  }
  MatrixQ m(static_cast<Eigen::Index>(rows.size()), n);
  for (size_t r = 0; r < rows.size(); ++r) m.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
  return m;
}

}  // namespace liex
