#include "liex/semigroup.hpp"

#include "liex/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace liex {

SemigroupTable::SemigroupTable(std::vector<std::vector<int>> rows)
    : order_(static_cast<int>(rows.size())) {
  if (order_ == 0) throw InputError("semigroup table must be non-empty");
  cells_.reserve(static_cast<size_t>(order_ * order_));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != order_) throw InputError("semigroup table must be square");
    for (int v : row) {
      if (v < 0 || v >= order_) throw InputError("semigroup table entry out of range");
      cells_.push_back(v);
    }
  }
}

std::vector<std::vector<int>> SemigroupTable::rows() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(order_));
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) out[static_cast<size_t>(a)].push_back(at(a, b));
  }
  return out;
}

SemigroupReport validate_semigroup(const SemigroupTable& s) {
  SemigroupReport report;
  const int n = s.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (s.at(a, b) != s.at(b, a)) report.commutativity.push_back({a, b});
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (s.at(s.at(a, b), c) != s.at(a, s.at(b, c))) report.associativity.push_back({a, b, c});
      }
    }
  }
  return report;
}

std::optional<int> zero_element(const SemigroupTable& s) {
  std::optional<int> zero;
  for (int z = 0; z < s.order(); ++z) {
    bool absorbing = true;
    for (int a = 0; a < s.order() && absorbing; ++a) {
      absorbing = s.at(a, z) == z && s.at(z, a) == z;
    }
    if (!absorbing) continue;
    // z = z z' = z' for two zeros z, z'
    if (zero) throw Error("internal", "two distinct zero elements");
    zero = z;
  }
  return zero;
}

SemigroupTable relabel(const SemigroupTable& s, const std::vector<int>& perm) {
  const int n = s.order();
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      rows[static_cast<size_t>(perm[static_cast<size_t>(a)])][static_cast<size_t>(perm[static_cast<size_t>(b)])] =
          perm[static_cast<size_t>(s.at(a, b))];
    }
  }
  return SemigroupTable(std::move(rows));
}

SemigroupTable canonical_form(const SemigroupTable& s) {
  std::vector<int> perm(static_cast<size_t>(s.order()));
  std::iota(perm.begin(), perm.end(), 0);
  SemigroupTable best = s;
  do {
    SemigroupTable t = relabel(s, perm);
    if (t < best) best = std::move(t);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::optional<std::vector<int>> semigroups_isomorphic(const SemigroupTable& a,
                                                      const SemigroupTable& b) {
  if (a.order() != b.order()) return std::nullopt;
  std::vector<int> perm(static_cast<size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

namespace {

// Depth-first fill of the upper triangle; a branch is cut as soon as some
// fully-determined triple breaks associativity.
class Enumerator {
 public:
  explicit Enumerator(int n) : n_(n), cells_(static_cast<size_t>(n * n), -1) {
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) slots_.emplace_back(a, b);
    }
  }

  std::vector<SemigroupTable> run() {
    fill(0);
    return std::move(found_);
  }

 private:
  int get(int a, int b) const { return cells_[static_cast<size_t>(a * n_ + b)]; }

  bool consistent() const {
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        const int ab = get(a, b);
        if (ab < 0) continue;
        for (int c = 0; c < n_; ++c) {
          const int bc = get(b, c);
          if (bc < 0) continue;
          const int left = get(ab, c), right = get(a, bc);
          if (left >= 0 && right >= 0 && left != right) return false;
        }
      }
    }
    return true;
  }

  void fill(size_t k) {
    if (k == slots_.size()) {
      std::vector<std::vector<int>> rows(static_cast<size_t>(n_));
      for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) rows[static_cast<size_t>(a)].push_back(get(a, b));
      }
      found_.emplace_back(std::move(rows));
      return;
    }
    const auto [a, b] = slots_[k];
    for (int v = 0; v < n_; ++v) {
      cells_[static_cast<size_t>(a * n_ + b)] = v;
      cells_[static_cast<size_t>(b * n_ + a)] = v;
      if (consistent()) fill(k + 1);
    }
    cells_[static_cast<size_t>(a * n_ + b)] = -1;
    cells_[static_cast<size_t>(b * n_ + a)] = -1;
  }

  int n_;
  std::vector<int> cells_;
  std::vector<std::pair<int, int>> slots_;
  std::vector<SemigroupTable> found_;
};

}  // namespace

std::vector<SemigroupTable> enumerate_abelian_semigroups(int order, bool up_to_isomorphism,
                                                         int max_order) {
  if (order < 1) throw InputError("semigroup order must be positive");
  if (order > max_order) {
    throw Error("bound-exceeded",
                "semigroup order " + std::to_string(order) + " exceeds bound " + std::to_string(max_order),
                {order, max_order});
  }
  auto all = Enumerator(order).run();
  if (!up_to_isomorphism) {
    std::sort(all.begin(), all.end());
    return all;
  }
  std::set<SemigroupTable> reps;
  for (const auto& t : all) reps.insert(canonical_form(t));
  return {reps.begin(), reps.end()};
}

SemigroupTable builtin_s2() { return SemigroupTable({{1, 1}, {1, 1}}); }

SemigroupTable builtin_s3() { return SemigroupTable({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}); }

SemigroupTable builtin_s3_associative() {
  return SemigroupTable({{0, 0, 0}, {0, 0, 1}, {0, 1, 2}});
}

SemigroupTable cyclic_group(int order) {
  std::vector<std::vector<int>> rows(static_cast<size_t>(order));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) rows[static_cast<size_t>(a)].push_back((a + b) % order);
  }
  return SemigroupTable(std::move(rows));
}

SemigroupTable trivial_semigroup() { return SemigroupTable(std::vector<std::vector<int>>{{0}}); }

SemigroupTable builtin_semigroup(const std::string& name) {
  if (name == "S2") return builtin_s2();
  if (name == "S3") return builtin_s3();
  if (name == "S3a") return builtin_s3_associative();
  if (name == "trivial" || name == "S1") return trivial_semigroup();
  if (name.size() > 1 && name[0] == 'Z') {
    const std::string digits = name.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const int n = std::stoi(digits);
      if (n >= 1 && n <= 16) return cyclic_group(n);
    }
  }
  throw Error("unknown-semigroup", "unknown semigroup '" + name + "'");
}

}  // namespace liex
