#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "fibpaths/kfib.hpp"
#include "fibpaths/oracle.hpp"

using namespace fibpaths;
using namespace fibpaths::oracle;

TEST_CASE("family constraints") {
  CHECK(constraint_of(FamilyKind::Fib).nonneg);
  CHECK(constraint_of(FamilyKind::Fib).end_at_zero);
  CHECK_FALSE(constraint_of(FamilyKind::Grand).nonneg);
  CHECK(constraint_of(FamilyKind::Grand).end_at_zero);
  CHECK(constraint_of(FamilyKind::Prefix).nonneg);
  CHECK_FALSE(constraint_of(FamilyKind::Prefix).end_at_zero);
  CHECK_FALSE(constraint_of(FamilyKind::GrandPrefix).nonneg);
  CHECK_FALSE(constraint_of(FamilyKind::GrandPrefix).end_at_zero);
}

TEST_CASE("counts for k = 2, n = 3") {
  CHECK(count_paths(FamilyKind::Fib, 2, 3) == 13);
  CHECK(count_paths(FamilyKind::Grand, 2, 3) == 16);
  CHECK(count_paths(FamilyKind::Prefix, 2, 3) == 26);
}

TEST_CASE("listing fib paths of length 3 for k = 2") {
  const auto paths = list_paths(FamilyKind::Fib, 2, 3);
  std::vector<std::pair<std::string, long>> got;
  for (const auto& p : paths) got.emplace_back(format_path(p.steps), p.weight.get_si());
  std::sort(got.begin(), got.end());
  const std::vector<std::pair<std::string, long>> want{
      {"H1 H1 H1", 1}, {"H1 H2", 2}, {"H1 U D", 1}, {"H2 H1", 2},
      {"H3", 5},       {"U D H1", 1}, {"U H1 D", 1}};
  CHECK(got == want);
  long total = 0;
  for (const auto& [_, w] : got) total += w;
  CHECK(total == 13);
}

TEST_CASE("short paths") {
  for (unsigned k = 1; k <= 4; ++k) {
    const auto empty = list_paths(FamilyKind::Fib, k, 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].steps.empty());
    CHECK(empty[0].weight == 1);
    CHECK(format_path(empty[0].steps) == "(empty)");

    const auto one = list_paths(FamilyKind::Fib, k, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].steps == Path{Step{Step::Kind::Horizontal, 1}});
    CHECK(one[0].weight == kfib(k, 1));
  }
  CHECK(list_paths(FamilyKind::Grand, 1, 1).size() == 1);
  CHECK(list_paths(FamilyKind::GrandPrefix, 1, 1).size() == 3);
}

TEST_CASE("listed weights add up to the count") {
  for (FamilyKind f : kAllFamilies) {
    for (unsigned k = 1; k <= 4; ++k) {
      for (unsigned n = 0; n <= kMaxListLength; ++n) {
        Integer total = 0;
        for (const auto& p : list_paths(f, k, n)) total += p.weight;
        CHECK(total == count_paths(f, k, n));
      }
    }
  }
}

TEST_CASE("path sets nest") {
  for (unsigned k = 1; k <= 4; ++k) {
    for (unsigned n = 0; n <= 10; ++n) {
      const Integer fib = count_paths(FamilyKind::Fib, k, n, Mode::Memoized);
      const Integer grand = count_paths(FamilyKind::Grand, k, n, Mode::Memoized);
      const Integer prefix = count_paths(FamilyKind::Prefix, k, n, Mode::Memoized);
      const Integer all = count_paths(FamilyKind::GrandPrefix, k, n, Mode::Memoized);
      CHECK(fib <= prefix);
      CHECK(prefix <= all);
      CHECK(fib <= grand);
      CHECK(grand <= all);
    }
  }
}

TEST_CASE("without horizontal steps only even lengths survive") {
  const ColorCount none = [](unsigned) { return Integer(0); };
  const PathConstraint dyck = constraint_of(FamilyKind::Fib);
  for (unsigned n = 0; n <= 12; ++n) {
    const Integer c = count_paths(dyck, none, n);
    if (n % 2) {
      CHECK(c == 0);
    } else {
      CHECK(c == catalan(n / 2));
    }
  }
  // Unit colors give Motzkin numbers.
  const ColorCount unit = [](unsigned l) { return Integer(l == 1 ? 1 : 0); };
  CHECK(count_paths(dyck, unit, 9) == 835);
}

TEST_CASE("budget limits") {
  CHECK_THROWS_AS(count_paths(FamilyKind::Fib, 1, kMaxCountLength + 1), BudgetExceeded);
  CHECK_THROWS_AS(list_paths(FamilyKind::Fib, 1, kMaxListLength + 1), BudgetExceeded);
  CHECK_NOTHROW(count_paths(FamilyKind::Fib, 1, kMaxCountLength, Mode::Memoized));
}

TEST_CASE("memoized and plain recursion agree") {
  for (FamilyKind f : kAllFamilies) {
    for (unsigned k = 1; k <= 3; ++k) {
      for (unsigned n = 0; n <= 9; ++n) {
        CHECK(count_paths(f, k, n, Mode::Plain) == count_paths(f, k, n, Mode::Memoized));
      }
    }
  }
}
