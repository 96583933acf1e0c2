#include <doctest.h>

#include <vector>

#include "ordmatch/bigint.hpp"
#include "ordmatch/clique.hpp"
#include "ordmatch/extract.hpp"
#include "ordmatch/matching.hpp"
#include "ordmatch/oracle.hpp"

using namespace ordmatch;

TEST_CASE("matching counts") {
  CHECK(matching_count(2, 2) == 3);
  CHECK(matching_count(2, 3) == 10);
  CHECK(matching_count(3, 3) == 280);
  CHECK(matching_count(4, 2) == 105);
  CHECK(matching_count(9, 2) == 34459425);
  CHECK(matching_count(1, 5) == 1);
  CHECK_THROWS(matching_count(0, 2));
  CHECK_THROWS(matching_count(2, 0));
}

TEST_CASE("canonical enumeration") {
  std::vector<std::vector<std::vector<std::int64_t>>> seen;
  enumerate_matchings(2, 2, [&](const auto& edges) {
    seen.push_back(edges);
    return true;
  });
  REQUIRE(seen.size() == 3);
  CHECK(seen[0] == std::vector<std::vector<std::int64_t>>{{1, 2}, {3, 4}});
  CHECK(seen[1] == std::vector<std::vector<std::int64_t>>{{1, 3}, {2, 4}});
  CHECK(seen[2] == std::vector<std::vector<std::int64_t>>{{1, 4}, {2, 3}});

  // count agrees with the closed form at a larger size
  int count = 0;
  enumerate_matchings(3, 3, [&](const auto&) {
    ++count;
    return true;
  });
  CHECK(count == 280);

  // early stop
  int first = 0;
  enumerate_matchings(2, 2, [&](const auto&) {
    ++first;
    return false;
  });
  CHECK(first == 1);
}

TEST_CASE("enumeration budget") {
  try {
    enumerate_matchings(9, 2, [](const auto&) { return true; }, BigInt(100));
    FAIL("budget guard did not trigger");
  } catch (const BudgetExceededError& e) {
    CHECK(e.count() == 34459425);
  }
  CHECK_THROWS_AS(exact_ramsey(9, 2, BigInt(100)), BudgetExceededError);
}

TEST_CASE("unavoidable clique sizes, exactly") {
  const int expect[] = {0, 1, 2, 2, 2, 2, 2, 2};
  int prev = 0;
  for (int n = 1; n <= 7; ++n) {
    const auto res = exact_ramsey(n, 2);
    CHECK(res.value == expect[n]);
    CHECK(res.value >= prev);
    prev = res.value;
    CHECK(res.witness.n() == n);
    CHECK(full_report(res.witness).best_size == res.value);
  }
  CHECK(exact_ramsey(2, 3).value == 2);
  for (int r = 1; r <= 4; ++r) CHECK(exact_ramsey(1, r).value == 1);
}

TEST_CASE("exact values sit between the two bounds") {
  for (int n : {1, 2, 5, 8}) {
    const auto res = exact_ramsey(n, 2);
    CHECK(res.value >= guaranteed_size(2, n));
    const std::int64_t ceil_root =
        n == 1 ? 1 : static_cast<std::int64_t>(iroot(BigInt(n - 1), 3)) + 1;
    CHECK(res.value <= ceil_root);
  }
}

TEST_CASE("sweep rows") {
  std::vector<Matching> instances;
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    instances.push_back(random_matching(10, 2, 7000 + seed));
  const auto rows = sweep_check(instances);
  REQUIRE(rows.size() == 5);
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    CHECK(row.index == static_cast<int>(i));
    CHECK(row.n == 10);
    CHECK(row.pass);
    CHECK(BigInt(row.n) <= row.upper);
    CHECK(row.lower <= row.upper);
    CHECK(BigInt(row.built) == row.lower);
  }

  const auto threaded = sweep_check(instances, 2);
  REQUIRE(threaded.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(threaded[i].upper == rows[i].upper);
    CHECK(threaded[i].lower == rows[i].lower);
    CHECK(threaded[i].built == rows[i].built);
    CHECK(threaded[i].pass == rows[i].pass);
  }

  CHECK(sweep_row_tsv_header() == "index\tn\tupper\tlower\tbuilt\tpass");
  CHECK(sweep_row_tsv(rows[0]).find("\tpass") != std::string::npos);
  SweepRow bad{3, 5, BigInt(4), BigInt(9), 3, false};
  CHECK(sweep_row_tsv(bad) == "3\t5\t4\t9\t3\tFAIL");
}
