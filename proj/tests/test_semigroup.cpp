#include "liex/error.hpp"
#include "liex/semigroup.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace liex;

TEST_CASE("labelled enumeration matches exhaustive listing") {
  for (int order = 1; order <= 3; ++order) {
    CAPTURE(order);
    const auto expected = oracle::all_semigroups(order);
    const auto got = enumerate_abelian_semigroups(order, false);
    REQUIRE(got.size() == expected.size());
    std::set<std::vector<int>> a(expected.begin(), expected.end());
    for (const auto& s : got) CHECK(a.count(s.cells()) == 1);
  }
}

TEST_CASE("isomorphism classes: 1, 3, 12, 58") {
  const int known[] = {1, 3, 12, 58};
  for (int order = 1; order <= 4; ++order) {
    CAPTURE(order);
    CHECK(enumerate_abelian_semigroups(order, true).size() == static_cast<size_t>(known[order - 1]));
  }
  for (int order = 1; order <= 3; ++order) {
    CHECK(enumerate_abelian_semigroups(order, true).size() ==
          static_cast<size_t>(oracle::isomorphism_classes(oracle::all_semigroups(order), order)));
  }
}

TEST_CASE("representatives are canonical, sorted and pairwise non-isomorphic") {
  const auto reps = enumerate_abelian_semigroups(3, true);
  CHECK(std::is_sorted(reps.begin(), reps.end()));
  for (size_t i = 0; i < reps.size(); ++i) {
    CHECK(canonical_form(reps[i]) == reps[i]);
    CHECK(validate_semigroup(reps[i]).ok());
    for (size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(semigroups_isomorphic(reps[i], reps[j]));
  }
}

TEST_CASE("enumeration past the bound is refused") {
  CHECK_THROWS_AS(enumerate_abelian_semigroups(5, true), Error);
  CHECK(enumerate_abelian_semigroups(1, true, 1).size() == 1);
  try {
    enumerate_abelian_semigroups(3, true, 2);
    FAIL("expected bound-exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == "bound-exceeded");
  }
}

TEST_CASE("S2 has zero element lambda_2") {
  const auto s = builtin_s2();
  CHECK(s.order() == 2);
  CHECK(validate_semigroup(s).ok());
  REQUIRE(zero_element(s));
  CHECK(*zero_element(s) == 1);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(s.at(a, b) == 1);
}

TEST_CASE("literal S3 table is commutative but not associative") {
  const auto s = builtin_s3();
  const auto report = validate_semigroup(s);
  CHECK(report.commutativity.empty());
  REQUIRE_FALSE(report.associativity.empty());
  // (l2 l3) l3 = l2 but l2 (l3 l3) = l1
  CHECK(s.at(s.at(1, 2), 2) == 1);
  CHECK(s.at(1, s.at(2, 2)) == 0);
  CHECK(*zero_element(s) == 0);
}

TEST_CASE("S3a repairs only the square of lambda_3") {
  const auto s = builtin_s3();
  const auto a = builtin_s3_associative();
  CHECK(validate_semigroup(a).ok());
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      if (x == 2 && y == 2) continue;
      CHECK(s.at(x, y) == a.at(x, y));
    }
  CHECK(a.at(2, 2) == 2);
  CHECK(canonical_form(a).cells() == std::vector<int>{0, 0, 0, 0, 0, 1, 0, 1, 2});
}

TEST_CASE("cyclic groups and relabelling") {
  const auto z3 = cyclic_group(3);
  CHECK(validate_semigroup(z3).ok());
  CHECK_FALSE(zero_element(z3));
  const std::vector<int> perm{2, 0, 1};
  const auto moved = relabel(z3, perm);
  const auto iso = semigroups_isomorphic(z3, moved);
  REQUIRE(iso);
  CHECK(relabel(z3, *iso) == moved);
  CHECK(builtin_semigroup("Z3") == z3);
  CHECK(builtin_semigroup("trivial").order() == 1);
  CHECK_THROWS_AS(builtin_semigroup("Q8"), Error);
}

TEST_CASE("malformed tables") {
  CHECK_THROWS_AS(SemigroupTable(std::vector<std::vector<int>>{{0, 1}, {1}}), InputError);
  CHECK_THROWS_AS(SemigroupTable(std::vector<std::vector<int>>{{0, 2}, {2, 0}}), InputError);
  const SemigroupTable bad(std::vector<std::vector<int>>{{0, 1}, {0, 1}});
  CHECK_FALSE(validate_semigroup(bad).commutativity.empty());
}
