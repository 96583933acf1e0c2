#include <doctest.h>

#include <vector>

#include <nlohmann/json.hpp>

#include "ordmatch/bigint.hpp"
#include "ordmatch/bounds.hpp"
#include "ordmatch/clique.hpp"
#include "ordmatch/extract.hpp"
#include "ordmatch/matching.hpp"
#include "ordmatch/pattern.hpp"

using namespace ordmatch;

namespace {

const std::vector<std::vector<std::int64_t>> kFigLeft = {{1, 4, 7}, {2, 5, 6}, {3, 8, 9}};
const std::vector<std::vector<std::int64_t>> kFigRight = {{1, 6, 7}, {2, 4, 5}, {3, 8, 9}};

}  // namespace

TEST_CASE("inductive budgets") {
  const auto pb = inductive_budgets(OrderedPartition::whole(3), BudgetTable::uniform(3, 2));
  CHECK(pb.base == OrderedPartition::whole(3));
  CHECK(pb.caps.size() == 2);
  CHECK(pb.caps.at(OrderedPartition::parse("1,2")) == 128);
  CHECK(pb.caps.at(OrderedPartition::parse("2,1")) == 128);
  CHECK(pb.total == 256);

  const auto pb2 = inductive_budgets(OrderedPartition::parse("1,2"), BudgetTable::uniform(3, 1));
  CHECK(pb2.caps.size() == 1);
  CHECK(pb2.caps.at(OrderedPartition::discrete(3)) == 1);
  CHECK(pb2.total == 1);

  CHECK_THROWS(inductive_budgets(OrderedPartition::discrete(3), BudgetTable::uniform(3, 2)));
  CHECK_THROWS(inductive_budgets(OrderedPartition::whole(2), BudgetTable::uniform(3, 2)));
}

TEST_CASE("dichotomy finds the first over-budget split") {
  const Matching m(3, kFigLeft);
  const auto w = find_partite_witness(m, OrderedPartition::parse("1,2"));
  REQUIRE(w.has_value());
  const auto pb = inductive_budgets(OrderedPartition::parse("1,2"), BudgetTable::uniform(3, 1));
  const auto out = dichotomy(m, *w, pb);
  CHECK_FALSE(out.interval_wise);
  CHECK(out.edges == std::vector<int>{0, 1});
  CHECK(out.witness.parts == OrderedPartition::discrete(3));
  CHECK(out.witness.cuts == std::vector<std::int64_t>{0, 3, 5, 9});
  CHECK(witness_valid(m, out.edges, out.witness));
}

TEST_CASE("dichotomy falls through to an independent set under large budgets") {
  const auto pb = inductive_budgets(OrderedPartition::parse("1,2"), BudgetTable::uniform(3, 100));

  const Matching right(3, kFigRight);
  const auto wr = find_partite_witness(right, OrderedPartition::parse("1,2"));
  const auto out_r = dichotomy(right, *wr, pb);
  CHECK(out_r.interval_wise);
  CHECK(out_r.edges == std::vector<int>{0, 1, 2});  // hulls already disjoint
  CHECK(out_r.witness.cuts == wr->cuts);

  const Matching left(3, kFigLeft);
  const auto wl = find_partite_witness(left, OrderedPartition::parse("1,2"));
  const auto out_l = dichotomy(left, *wl, pb);
  CHECK(out_l.interval_wise);
  CHECK(out_l.edges == std::vector<int>{0, 2});  // edge 1 nests inside edge 0
  CHECK(interval_wise_subset(left, out_l.edges, out_l.witness));
}

TEST_CASE("projection takes per-part minima") {
  const Matching right(3, kFigRight);
  const auto w = find_partite_witness(right, OrderedPartition::parse("1,2"));
  const PointSet z = project_to_points(right, *w);
  CHECK(z.dim() == 2);
  CHECK(z.points() == std::vector<std::vector<BigInt>>{{1, 6}, {2, 4}, {3, 8}});

  // increasing sequences of projected points are exactly the AB|AABB cliques
  const int mono = longest_monotone(z, SignFunction::parse("++")).length;
  CHECK(mono == 2);
  CHECK(mono == largest_clique(right, Pattern("ABAABB")).size);

  const Matching left(3, kFigLeft);
  const auto wl = find_partite_witness(left, OrderedPartition::parse("1,2"));
  CHECK_THROWS(project_to_points(left, *wl));  // not interval-wise
}

TEST_CASE("size bounds") {
  CHECK(uniform_size_bound(2, 2) == 16);
  CHECK(uniform_size_bound(3, 2) == 1024);
  CHECK(uniform_size_bound(3, 2) == upper_bound_value(3, BudgetTable::uniform(3, 2)));
  CHECK(uniform_size_bound(1, 7) == 7);
  CHECK_THROWS(uniform_size_bound(0, 2));
  CHECK_THROWS(uniform_size_bound(2, 0));

  CHECK(guaranteed_size(2, 17) == 3);
  CHECK(guaranteed_size(2, 16) == 2);
  CHECK(guaranteed_size(2, 2) == 1);
  CHECK(guaranteed_size(3, 200) == 2);
  CHECK(guaranteed_size(1, 9) == 9);  // every pair realizes the only 1-pattern

  for (int r = 2; r <= 3; ++r)
    for (std::int64_t n : {2, 5, 17, 100, 1000, 250000}) {
      const unsigned exp = (1u << static_cast<unsigned>(r)) - 1;
      const std::int64_t floor_half = static_cast<std::int64_t>(iroot(BigInt(n), exp) / 2);
      CHECK(guaranteed_size(r, n) >= floor_half);
    }
}

TEST_CASE("extraction returns a verified clique with a coherent trace") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const int r = 2 + static_cast<int>(seed % 2);
    const Matching m = random_matching(20, r, 400 + seed);
    const auto res = extract_best(m, 2);
    REQUIRE(!res.clique.empty());
    for (size_t i = 0; i < res.clique.size(); ++i) {
      CHECK(res.clique[i] >= 0);
      CHECK(res.clique[i] < m.n());
      if (i > 0) CHECK(res.clique[i - 1] < res.clique[i]);
      for (size_t j = i + 1; j < res.clique.size(); ++j)
        CHECK(pattern_of_pair(m.edge(res.clique[i]), m.edge(res.clique[j])) == res.pattern);
    }
    REQUIRE(!res.trace.empty());
    CHECK(res.trace.front().parts == OrderedPartition::whole(r));
    CHECK(res.trace.front().in_size == m.n());
    CHECK(res.trace.back().branch == 'p');
    CHECK(res.trace.back().out_size == static_cast<int>(res.clique.size()));
    for (size_t t = 0; t < res.trace.size(); ++t) {
      const auto& st = res.trace[t];
      CHECK(st.out_size >= 1);
      CHECK(st.out_size <= st.in_size);
      CHECK((st.branch == 'a' || st.branch == 'b' || st.branch == 'p'));
      CHECK(st.refined.has_value() == (st.branch == 'b'));
      if (t + 1 < res.trace.size()) CHECK(res.trace[t + 1].in_size == st.out_size);
    }

    // a clique never beats the exhaustive search
    const auto rep = full_report(m);
    CHECK(static_cast<int>(res.clique.size()) <= rep.best_size);
    CHECK(static_cast<int>(res.clique.size()) <= rep.cliques.at(res.pattern).size);
  }
}

TEST_CASE("extraction guarantee") {
  // below the threshold the guarantee makes no promise
  const Matching tiny(2, {{1, 2}});
  CHECK_FALSE(extract_clique(tiny, 1).has_value());
  CHECK_THROWS(extract_best(tiny, 0));

  // 17 > 16 = uniform_size_bound(2, 2): a clique of size 3 must come out
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Matching m = random_matching(17, 2, 600 + seed);
    const auto res = extract_clique(m, 2);
    REQUIRE(res.has_value());
    CHECK(static_cast<int>(res->clique.size()) >= 3);
  }
}

TEST_CASE("extraction json") {
  const Matching m = random_matching(10, 2, 99);
  const auto res = extract_best(m, 2);
  const auto j = extraction_to_json(res, false);
  CHECK(j.at("found") == true);
  CHECK(j.at("pattern") == res.pattern.word());
  CHECK(j.at("size") == res.clique.size());
  CHECK(!j.contains("trace"));
  const auto jt = extraction_to_json(res, true);
  REQUIRE(jt.contains("trace"));
  CHECK(jt.at("trace").size() == res.trace.size());
  CHECK(jt.at("trace").back().at("branch") == "p");
}
