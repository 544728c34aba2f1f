#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace liex {

/// Multiplication table of a finite commutative semigroup on {0, ..., N-1}.
///
/// `at(a, b)` is the index c with lambda_a lambda_b = lambda_c. Indices are
/// 0-based in memory; the JSON form and all user-facing text are 1-based.
/// Construction only enforces shape and range; commutativity and
/// associativity are checked by `validate_semigroup`.
class SemigroupTable {
 public:
  SemigroupTable() = default;
  /// Throws InputError on a ragged table or out-of-range entry.
  explicit SemigroupTable(std::vector<std::vector<int>> rows);

  int order() const { return order_; }
  int at(int a, int b) const { return cells_[static_cast<size_t>(a * order_ + b)]; }
  const std::vector<int>& cells() const { return cells_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const SemigroupTable&, const SemigroupTable&) = default;
  friend auto operator<=>(const SemigroupTable& a, const SemigroupTable& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.cells_ <=> b.cells_;
  }

 private:
  int order_ = 0;
  std::vector<int> cells_;
};

struct SemigroupReport {
  std::vector<std::array<int, 2>> commutativity;  // pairs (a, b), 0-based, a < b
  std::vector<std::array<int, 3>> associativity;  // triples (a, b, c), 0-based
  bool ok() const { return commutativity.empty() && associativity.empty(); }
};

SemigroupReport validate_semigroup(const SemigroupTable& s);

/// Absorbing element z with s(a, z) = z for every a.
std::optional<int> zero_element(const SemigroupTable& s);

/// Default bound on enumeration order.
inline constexpr int kDefaultMaxOrder = 4;

/// Every commutative associative table of the given order, sorted. With
/// `up_to_isomorphism` each relabeling orbit is represented once by its
/// lexicographically least member. Throws Error("bound-exceeded") past
/// `max_order`.
std::vector<SemigroupTable> enumerate_abelian_semigroups(int order, bool up_to_isomorphism,
                                                         int max_order = kDefaultMaxOrder);

/// Table obtained by renaming element a to perm[a].
SemigroupTable relabel(const SemigroupTable& s, const std::vector<int>& perm);

/// Lexicographically least relabeling of `s`.
SemigroupTable canonical_form(const SemigroupTable& s);

/// Permutation `perm` with relabel(a, perm) == b, if one exists.
std::optional<std::vector<int>> semigroups_isomorphic(const SemigroupTable& a,
                                                      const SemigroupTable& b);

/// lambda_a lambda_b = lambda_2 for all a, b (0-based: everything maps to 1).
SemigroupTable builtin_s2();
/// Three elements, lambda_1 absorbing, lambda_2 lambda_3 = lambda_2 and
/// lambda_2^2 = lambda_3^2 = lambda_1. This table is commutative but NOT
/// associative: (l2 l3) l3 = l2 while l2 (l3 l3) = l1.
SemigroupTable builtin_s3();
/// Associative variant of builtin_s3 with lambda_3 an identity
/// (lambda_3^2 = lambda_3); agrees with builtin_s3 on every other product.
SemigroupTable builtin_s3_associative();
SemigroupTable cyclic_group(int order);
SemigroupTable trivial_semigroup();

/// Resolves "S2", "S3", "S3a", "Z<n>", "trivial". Throws Error("unknown-semigroup").
SemigroupTable builtin_semigroup(const std::string& name);

}  // namespace liex
