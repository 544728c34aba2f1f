#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>

namespace liex {

// Expression templates are off so that Eigen sees a plain value type.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "p", "-p", "p/q" (whitespace tolerated). Throws InputError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Exact square root if `q` is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

inline Integer numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;

}  // namespace liex
