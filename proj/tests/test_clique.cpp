#include <doctest.h>

#include <vector>

#include <nlohmann/json.hpp>

#include "ordmatch/build.hpp"
#include "ordmatch/clique.hpp"
#include "ordmatch/matching.hpp"
#include "ordmatch/pattern.hpp"

using namespace ordmatch;

namespace {

const std::vector<std::vector<std::int64_t>> kFigLeft = {{1, 4, 7}, {2, 5, 6}, {3, 8, 9}};
const std::vector<std::vector<std::int64_t>> kFigRight = {{1, 6, 7}, {2, 4, 5}, {3, 8, 9}};
const std::vector<std::vector<std::int64_t>> kLayer3 = {{1, 5, 9}, {2, 6, 7}, {3, 4, 8}};

Matching separated(int n) {
  // edge i occupies [2i-1, 2i]: every pair realizes AABB
  std::vector<std::vector<std::int64_t>> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({2 * i + 1, 2 * i + 2});
  return Matching(2, edges);
}

Matching nested(int n) {
  // edge i is {i+1, 2n-i}: every pair realizes ABBA
  std::vector<std::vector<std::int64_t>> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({i + 1, 2 * n - i});
  return Matching(2, edges);
}

}  // namespace

TEST_CASE("single-pattern cliques on structured instances") {
  const Matching sep = separated(5);
  CHECK(largest_clique(sep, Pattern("AABB")).size == 5);
  CHECK(largest_clique(sep, Pattern("ABAB")).size == 1);
  CHECK(largest_clique(sep, Pattern("ABBA")).size == 1);

  const Matching nest = nested(6);
  CHECK(largest_clique(nest, Pattern("ABBA")).size == 6);
  CHECK(largest_clique(nest, Pattern("AABB")).size == 1);

  const Matching right(3, kFigRight);
  const auto e = largest_clique(right, Pattern("ABAABB"));
  CHECK(e.size == 2);
  const bool w02 = e.witness == std::vector<int>{0, 2};
  const bool w12 = e.witness == std::vector<int>{1, 2};
  CHECK((w02 || w12));

  // wrong uniformity is rejected
  CHECK_THROWS(largest_clique(right, Pattern("AABB")));
}

TEST_CASE("witnesses pairwise realize their pattern") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Matching m = random_matching(10, 2, seed);
    for (const Pattern& p : all_patterns(2)) {
      const auto e = largest_clique(m, p);
      REQUIRE(e.size == static_cast<int>(e.witness.size()));
      REQUIRE(e.size >= 1);
      for (size_t i = 0; i < e.witness.size(); ++i)
        for (size_t j = i + 1; j < e.witness.size(); ++j)
          CHECK(pattern_of_pair(m.edge(e.witness[i]), m.edge(e.witness[j])) == p);
    }
  }
}

TEST_CASE("full reports") {
  const Matching single(2, {{1, 2}});
  const auto rep = full_report(single);
  CHECK(rep.best_size == 1);
  CHECK(rep.best == Pattern("AABB"));  // ties pick the smallest word
  CHECK(rep.cliques.size() == 3);
  for (const auto& [p, e] : rep.cliques) CHECK(e.size == 1);

  const Matching m = random_matching(12, 2, 31);
  const auto r1 = full_report(m, 1);
  const auto r3 = full_report(m, 3);
  CHECK(r1.best == r3.best);
  CHECK(r1.best_size == r3.best_size);
  for (const auto& [p, e] : r1.cliques) {
    CHECK(r3.cliques.at(p).size == e.size);
    CHECK(r3.cliques.at(p).witness == e.witness);
  }
  CHECK(verify_report(m, r1).empty());
}

TEST_CASE("fast path agrees with exact search on collectable patterns") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Matching m = random_matching(12, 3, 200 + seed);
    for (const Pattern& p : all_patterns(3)) {
      if (!is_collectable(p)) continue;
      CHECK(chain_fast_path(m, p).size == largest_clique(m, p).size);
    }
  }
}

TEST_CASE("edge-count guard") {
  std::vector<std::vector<std::int64_t>> edges;
  for (int i = 0; i < 10001; ++i) edges.push_back({2 * i + 1, 2 * i + 2});
  const Matching huge(2, edges);
  CHECK_THROWS(largest_clique(huge, Pattern("ABAB")));
  CHECK_THROWS(full_report(huge));
  // force is honored (pattern with no structure here finishes instantly)
  CHECK(largest_clique(huge, Pattern("ABAB"), true).size == 1);
}

TEST_CASE("report json round trip and verification") {
  const Matching m = random_matching(8, 2, 7);
  const auto rep = full_report(m);
  const auto back = report_from_json(report_to_json(rep));
  CHECK(back.r == rep.r);
  CHECK(back.n == rep.n);
  CHECK(back.best == rep.best);
  CHECK(back.best_size == rep.best_size);
  for (const auto& [p, e] : rep.cliques) {
    CHECK(back.cliques.at(p).size == e.size);
    CHECK(back.cliques.at(p).witness == e.witness);
  }
  CHECK(verify_report(m, back).empty());

  auto tampered = rep;
  tampered.best_size += 1;
  CHECK_FALSE(verify_report(m, tampered).empty());

  auto shrunk = rep;
  shrunk.cliques.at(Pattern("AABB")).witness.clear();
  CHECK_FALSE(verify_report(m, shrunk).empty());

  auto outlier = rep;
  outlier.cliques.at(Pattern("ABAB")).witness = {0, 99};
  CHECK_FALSE(verify_report(m, outlier).empty());
}

TEST_CASE("blow-up cliques never exceed the factor product") {
  const Matching h(3, kFigLeft);
  const Matching layer(3, kLayer3);
  const Matching blown = blow_up(h, layer);
  const auto rep_h = full_report(h);
  const auto rep_l = full_report(layer);
  const auto rep_b = full_report(blown);
  for (const Pattern& p : all_patterns(3))
    CHECK(rep_b.cliques.at(p).size <=
          rep_h.cliques.at(p).size * rep_l.cliques.at(p).size);
}
