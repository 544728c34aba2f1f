#pragma once

#include "liex/rational.hpp"

#include <array>
#include <optional>

namespace liex {

/// Writes a nonzero integer as sign * squarefree * root^2 and returns
/// {sign * squarefree, root}.
std::array<Integer, 2> squarefree_decompose(const Integer& n);

/// Nontrivial rational (x, y, z) with z^2 = a x^2 + b y^2, for squarefree
/// nonzero integers a, b; nullopt when none exists. Lagrange descent.
std::optional<std::array<Rational, 3>> solve_legendre(const Integer& a, const Integer& b);

/// Nonzero x with x^T q x = 0 for a symmetric 3x3 rational q, or nullopt.
std::optional<VectorQ> isotropic_vector(const MatrixQ& q);

/// Some v with v^T q v = target for a symmetric 2x2 positive- or
/// negative-definite rational q, or nullopt.
std::optional<VectorQ> represent_binary(const MatrixQ& q, const Rational& target);

/// Rows of a rational P with P g P^T = I for a symmetric positive-definite
/// 3x3 g, or nullopt when g is not rationally equivalent to I. Factors only
/// the determinant.
std::optional<MatrixQ> orthonormal_frame(const MatrixQ& g);

}  // namespace liex
