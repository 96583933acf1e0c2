#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ordmatch/pattern.hpp"

using namespace ordmatch;

namespace {

// realize p by assigning increasing integers to its letters
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> realize(const Pattern& p) {
  std::vector<std::int64_t> e, f;
  std::int64_t v = 1;
  for (char c : p.word()) (c == 'A' ? e : f).push_back(v++);
  return {e, f};
}

std::vector<std::string> words(const std::vector<Pattern>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.word());
  return out;
}

}  // namespace

TEST_CASE("pattern word validation") {
  CHECK_THROWS(Pattern("BABA"));   // must start with A
  CHECK_THROWS(Pattern("AAB"));    // odd length
  CHECK_THROWS(Pattern("AABA"));   // unbalanced
  CHECK_THROWS(Pattern("AXBB"));   // alphabet
  CHECK_THROWS(Pattern(""));
  CHECK(Pattern("AB").uniformity() == 1);
  CHECK(Pattern("AABBAB").uniformity() == 3);
}

TEST_CASE("pattern of a pair") {
  CHECK(pattern_of_pair({1, 2, 5}, {3, 4, 6}).word() == "AABBAB");
  CHECK(pattern_of_pair({1, 2}, {3, 4}).word() == "AABB");
  CHECK(pattern_of_pair({1, 4, 7}, {2, 5, 6}).word() == "ABABBA");
  // the set holding the global minimum always plays A
  CHECK(pattern_of_pair({3, 4, 6}, {1, 2, 5}).word() == "AABBAB");
  CHECK_THROWS(pattern_of_pair({1, 2}, {2, 3}));  // overlap
  CHECK_THROWS(pattern_of_pair({2, 1}, {3, 4}));  // unsorted
  CHECK_THROWS(pattern_of_pair({1, 2}, {3, 4, 5}));
}

TEST_CASE("realize and recover round trip") {
  for (int r = 1; r <= 4; ++r)
    for (const auto& p : all_patterns(r)) {
      const auto [e, f] = realize(p);
      CHECK(pattern_of_pair(e, f) == p);
    }
}

TEST_CASE("block partitions") {
  REQUIRE(block_partition(Pattern("AABBBABBAA")).has_value());
  CHECK(block_partition(Pattern("AABBBABBAA"))->to_string() == "2,1,2");
  CHECK_FALSE(block_partition(Pattern("AABABBABBA")).has_value());
  CHECK(block_partition(Pattern("ABAB"))->to_string() == "1,1");
  CHECK(block_partition(Pattern("AB"))->to_string() == "1");
}

TEST_CASE("collectability") {
  CHECK(is_collectable(Pattern("AABB")));
  CHECK(is_collectable(Pattern("ABAABBBA")));
  CHECK_FALSE(is_collectable(Pattern("AABABBABBA")));
}

TEST_CASE("sign function order") {
  const auto taus = all_sign_functions(3);
  REQUIRE(taus.size() == 4);
  CHECK(taus[0].to_string() == "+++");
  CHECK(taus[1].to_string() == "++-");
  CHECK(taus[2].to_string() == "+-+");
  CHECK(taus[3].to_string() == "+--");
  CHECK(std::is_sorted(taus.begin(), taus.end()));
  CHECK(all_sign_functions(1).size() == 1);
  CHECK(all_sign_functions(5).size() == 16);
  CHECK_THROWS(SignFunction::parse("-+"));  // first entry must be +
  CHECK(SignFunction::parse("++-").sign(3) == -1);
}

TEST_CASE("pattern from blocks and signs") {
  CHECK(pattern_from(OrderedPartition::parse("1,2,1"), SignFunction::parse("+++")).word() ==
        "ABAABBAB");
  CHECK(pattern_from(OrderedPartition::parse("1,2,1"), SignFunction::parse("+--")).word() ==
        "ABBBAABA");
  CHECK(pattern_from(OrderedPartition::parse("1,2"), SignFunction::parse("+-")).word() ==
        "ABBBAA");
}

TEST_CASE("patterns of a partition") {
  CHECK(words(patterns_of(OrderedPartition::parse("1,2,1"))) ==
        std::vector<std::string>{"ABAABBAB", "ABAABBBA", "ABBBAAAB", "ABBBAABA"});
  CHECK(words(patterns_of(OrderedPartition::parse("2"))) == std::vector<std::string>{"AABB"});
  CHECK(words(patterns_of(OrderedPartition::parse("1,1"))) ==
        std::vector<std::string>{"ABAB", "ABBA"});
}

TEST_CASE("block decomposition inverts pattern_from") {
  for (int r = 1; r <= 5; ++r)
    for (const auto& p : collectable_patterns(r)) {
      const auto dec = block_decomposition(p);
      REQUIRE(dec.has_value());
      CHECK(pattern_from(dec->first, dec->second) == p);
    }
}

TEST_CASE("pattern census") {
  // total r-patterns: C(2r-1, r-1)
  CHECK(all_patterns(1).size() == 1);
  CHECK(all_patterns(2).size() == 3);
  CHECK(all_patterns(3).size() == 10);
  CHECK(all_patterns(4).size() == 35);
  CHECK(all_patterns(5).size() == 126);
  const std::vector<size_t> collectable = {1, 3, 9, 27, 81};
  for (int r = 1; r <= 5; ++r) {
    CHECK(collectable_patterns(r).size() == collectable[static_cast<size_t>(r - 1)]);
    const auto all = all_patterns(r);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::set<Pattern>(all.begin(), all.end()).size() == all.size());
  }
}

TEST_CASE("doubling and omitting letters") {
  CHECK(double_letters(Pattern("AB"), 1).word() == "AABB");
  CHECK(double_letters(Pattern("ABAB"), 2).word() == "ABAABB");
  CHECK(omit_letters(Pattern("AABB"), 1).word() == "AB");
  CHECK(omit_letters(Pattern("ABAABB"), 2).word() == "ABAB");
  CHECK(omit_letters(Pattern("ABAABBAB"), 2).word() == "ABABAB");
  CHECK_THROWS(double_letters(Pattern("AABABBABBA"), 1));  // not collectable
  CHECK_THROWS(double_letters(Pattern("ABAB"), 3));        // j out of range
  CHECK_THROWS(omit_letters(Pattern("AB"), 1));            // result empty

  for (int r = 1; r <= 4; ++r)
    for (const auto& p : collectable_patterns(r))
      for (int j = 1; j <= r; ++j) {
        const Pattern d = double_letters(p, j);
        CHECK(d.uniformity() == r + 1);
        CHECK(is_collectable(d));
        CHECK(omit_letters(d, j) == p);
      }
}
