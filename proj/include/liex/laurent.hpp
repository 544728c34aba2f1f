#pragma once

#include "liex/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liex {

/// Finite sum of c_e eps^e, e in Z, over a coefficient field.
template <typename Coeff>
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int c) : LaurentPolynomial(Coeff(c), 0) {}  // NOLINT: scalar literals
  LaurentPolynomial(const Coeff& c, int exponent = 0) {  // NOLINT
    if (c != Coeff(0)) terms_.emplace(exponent, c);
  }

  static LaurentPolynomial monomial(const Coeff& c, int exponent) { return LaurentPolynomial(c, exponent); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Coeff>& terms() const { return terms_; }
  /// Lowest exponent; undefined for zero.
  int valuation() const { return terms_.begin()->first; }
  int degree() const { return terms_.rbegin()->first; }
  Coeff lowest_coefficient() const { return terms_.begin()->second; }
  Coeff coefficient(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentPolynomial shifted(int by) const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
    return out;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) accumulate(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) accumulate(e, -c);
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a) {
    LaurentPolynomial out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.accumulate(ea + eb, ca * cb);
    }
    return out;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Dense coefficients of eps^{-valuation} * p, lowest first.
  std::vector<Coeff> dense() const {
    std::vector<Coeff> out;
    if (is_zero()) return out;
    out.assign(static_cast<size_t>(degree() - valuation() + 1), Coeff(0));
    for (const auto& [e, c] : terms_) out[static_cast<size_t>(e - valuation())] = c;
    return out;
  }
  static LaurentPolynomial from_dense(const std::vector<Coeff>& coeffs, int shift = 0) {
    LaurentPolynomial out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] != Coeff(0)) out.terms_.emplace(static_cast<int>(i) + shift, coeffs[i]);
    }
    return out;
  }

 private:
  void accumulate(int e, const Coeff& c) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == Coeff(0)) terms_.erase(it);
  }

  std::map<int, Coeff> terms_;
};

namespace detail {

// Polynomial long division on dense coefficient vectors (lowest first).
template <typename Coeff>
std::pair<std::vector<Coeff>, std::vector<Coeff>> poly_divmod(std::vector<Coeff> num, const std::vector<Coeff>& den) {
  auto trim = [](std::vector<Coeff>& v) {
    while (!v.empty() && v.back() == Coeff(0)) v.pop_back();
  };
  trim(num);
  if (num.size() < den.size()) return {{}, num};
  std::vector<Coeff> quot(num.size() - den.size() + 1, Coeff(0));
  const Coeff lead = den.back();
  for (size_t k = quot.size(); k-- > 0;) {
    const Coeff f = num[k + den.size() - 1] / lead;
    quot[k] = f;
    if (f == Coeff(0)) continue;
    for (size_t j = 0; j < den.size(); ++j) num[k + j] -= f * den[j];
  }
  num.resize(den.size() - 1);
  trim(num);
  trim(quot);
  return {quot, num};
}

template <typename Coeff>
std::vector<Coeff> poly_gcd(std::vector<Coeff> a, std::vector<Coeff> b) {
  while (!b.empty()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

/// num / den in lowest terms, den a polynomial with constant term 1.
/// The canonical form makes == structural.
template <typename Coeff>
class RationalFunction {
 public:
  using Poly = LaurentPolynomial<Coeff>;

  RationalFunction() : den_(Coeff(1)) {}
  RationalFunction(int c) : num_(Coeff(c)), den_(Coeff(1)) {}  // NOLINT
  RationalFunction(const Coeff& c) : num_(c), den_(Coeff(1)) {}  // NOLINT
  RationalFunction(const Poly& p) : num_(p), den_(Coeff(1)) {}  // NOLINT
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_ == Poly(Coeff(1)); }

  /// Order of vanishing at eps = 0; nullopt for the zero function.
  std::optional<int> valuation() const {
    if (num_.is_zero()) return std::nullopt;
    return num_.valuation();
  }

  /// Value at eps = 0 when the valuation is >= 0.
  std::optional<Coeff> value_at_zero() const {
    if (num_.is_zero()) return Coeff(0);
    if (num_.valuation() < 0) return std::nullopt;
    return num_.coefficient(0);
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_laurent() && b.is_laurent()) return RationalFunction(a.num_ + b.num_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction out = a;
    out.num_ = -out.num_;
    return out;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_laurent() && b.is_laurent()) return RationalFunction(a.num_ * b.num_);
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(Coeff(1));
      return;
    }
    // move eps powers of the denominator into the numerator
    const int shift = den_.valuation();
    num_ = num_.shifted(-shift);
    den_ = den_.shifted(-shift);
    if (!den_.is_monomial()) {
      const int nval = num_.valuation();
      const auto g = detail::poly_gcd(num_.dense(), den_.dense());
      if (g.size() > 1) {
        num_ = Poly::from_dense(detail::poly_divmod(num_.dense(), g).first, nval);
        den_ = Poly::from_dense(detail::poly_divmod(den_.dense(), g).first, 0);
      }
    }
    const Coeff c = den_.coefficient(0);
    if (c != Coeff(1)) {
      const Poly inv(Coeff(1) / c);
      num_ *= inv;
      den_ *= inv;
    }
  }

  Poly num_;
  Poly den_;
};

using LaurentQ = LaurentPolynomial<Rational>;
using RationalFunctionQ = RationalFunction<Rational>;

/// "1/2 eps^4 + eps^3" style rendering.
std::string to_string(const LaurentQ& p);
std::string to_string(const RationalFunctionQ& f);

}  // namespace liex

namespace Eigen {

template <typename Coeff>
struct NumTraits<liex::RationalFunction<Coeff>> : GenericNumTraits<liex::RationalFunction<Coeff>> {
  using Real = liex::RationalFunction<Coeff>;
  using NonInteger = Real;
  using Nested = Real;
  using Literal = Real;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 100,
    MulCost = 100
  };
};

template <typename Coeff>
struct NumTraits<liex::LaurentPolynomial<Coeff>> : GenericNumTraits<liex::LaurentPolynomial<Coeff>> {
  using Real = liex::LaurentPolynomial<Coeff>;
  using NonInteger = Real;
  using Nested = Real;
  using Literal = Real;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 50
  };
};

}  // namespace Eigen
