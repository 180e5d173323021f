#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <vector>

#include "braidpoly/braid_word.hpp"
#include "braidpoly/errors.hpp"

using braidpoly::BraidWord;

namespace {

BraidWord cable_word() {
  BraidWord w{4, {2, 1, 3, 2, 2, 1, 3, 2, 2, 1, 3, 2}};
  w.letters.insert(w.letters.end(), {-1, -1, -1});
  return w;
}

}  // namespace

TEST_CASE("parse_braid reads signed-integer words") {
  CHECK(braidpoly::parse_braid("2: 1 1 1") == BraidWord{2, {1, 1, 1}});
  CHECK(braidpoly::parse_braid("3:") == BraidWord{3, {}});
  CHECK(braidpoly::parse_braid("  4:  1   -3 ") == BraidWord{4, {1, -3}});
  CHECK(braidpoly::parse_braid("4: 2 1 3 2 2 1 3 2 2 1 3 2 -1 -1 -1") ==
        cable_word());
}

TEST_CASE("parse_braid reads generator tokens with powers") {
  CHECK(braidpoly::parse_braid("2: s1 s1 s1") == BraidWord{2, {1, 1, 1}});
  CHECK(braidpoly::parse_braid("2: s1^3") == BraidWord{2, {1, 1, 1}});
  CHECK(braidpoly::parse_braid("4: s2 s1 s3 s2 s1^-3") ==
        BraidWord{4, {2, 1, 3, 2, -1, -1, -1}});
  CHECK(braidpoly::parse_braid("3: s2^0 s1") == BraidWord{3, {1}});
  CHECK(braidpoly::parse_braid("3: s1 -2 s2^2") == BraidWord{3, {1, -2, 2, 2}});
}

TEST_CASE("parse_braid rejects malformed input") {
  CHECK_THROWS_AS(braidpoly::parse_braid("3: 1 4"), braidpoly::ParseError);
  CHECK_THROWS_AS(braidpoly::parse_braid("2: 2"), braidpoly::ParseError);
  CHECK_THROWS_AS(braidpoly::parse_braid("1: 1"), braidpoly::ParseError);
  CHECK_THROWS_AS(braidpoly::parse_braid("0:"), braidpoly::ParseError);
  CHECK_THROWS_AS(braidpoly::parse_braid("-2: 1"), braidpoly::ParseError);
  CHECK_THROWS_AS(braidpoly::parse_braid("2 1 1"), braidpoly::ParseError);
  CHECK_THROWS_AS(braidpoly::parse_braid("x: 1"), braidpoly::ParseError);
  CHECK_THROWS_AS(braidpoly::parse_braid("2: 0"), braidpoly::ParseError);
  CHECK_THROWS_AS(braidpoly::parse_braid("2: one"), braidpoly::ParseError);
  CHECK_THROWS_AS(braidpoly::parse_braid("2: s"), braidpoly::ParseError);
  CHECK_THROWS_AS(braidpoly::parse_braid("2: s1^"), braidpoly::ParseError);
  CHECK_THROWS_AS(braidpoly::parse_braid("2 2: 1"), braidpoly::ParseError);
  CHECK_THROWS_AS(braidpoly::parse_braid("2: s-1"), braidpoly::ParseError);
}

TEST_CASE("to_text round-trips through parse_braid") {
  const std::vector<BraidWord> words = {
      {1, {}}, {3, {}}, {2, {1, 1, 1}}, {4, {1, -3, 2, 2}}, cable_word()};
  for (const BraidWord& w : words) {
    CAPTURE(braidpoly::to_text(w));
    CHECK(braidpoly::parse_braid(braidpoly::to_text(w)) == w);
  }
  CHECK(braidpoly::to_text(BraidWord{2, {1, 1, 1}}) == "2: 1 1 1");
  CHECK(braidpoly::to_text(BraidWord{3, {}}) == "3:");
}

TEST_CASE("closure_components counts permutation cycles") {
  CHECK(braidpoly::closure_components(BraidWord{2, {1, 1, 1}}) == 1);
  CHECK(braidpoly::closure_components(BraidWord{2, {1, 1}}) == 2);
  CHECK(braidpoly::closure_components(BraidWord{3, {}}) == 3);
  CHECK(braidpoly::closure_components(BraidWord{3, {1, 2}}) == 1);
  CHECK(braidpoly::closure_components(cable_word()) == 1);
}

TEST_CASE("exponent_sum adds letter signs") {
  CHECK(braidpoly::exponent_sum(BraidWord{2, {1, 1, 1}}) == 3);
  CHECK(braidpoly::exponent_sum(cable_word()) == 9);
  CHECK(braidpoly::exponent_sum(BraidWord{3, {}}) == 0);
  CHECK(braidpoly::exponent_sum(BraidWord{3, {1, -2, -2}}) == -1);
}

TEST_CASE("cyclic_free_reduce cancels inverse pairs") {
  CHECK(braidpoly::cyclic_free_reduce(BraidWord{2, {1, -1}}) ==
        BraidWord{2, {}});
  CHECK(braidpoly::cyclic_free_reduce(BraidWord{3, {1, 2, -2, -1}}) ==
        BraidWord{3, {}});
  CHECK(braidpoly::cyclic_free_reduce(BraidWord{3, {-1, 2, 1}}) ==
        BraidWord{3, {2}});
  CHECK(braidpoly::cyclic_free_reduce(BraidWord{2, {1, 1, 1}}) ==
        BraidWord{2, {1, 1, 1}});
}

TEST_CASE("rotated shifts letters cyclically") {
  const BraidWord w{3, {1, 2, 2}};
  CHECK(braidpoly::rotated(w, 0) == w);
  CHECK(braidpoly::rotated(w, 1) == BraidWord{3, {2, 2, 1}});
  CHECK(braidpoly::rotated(w, 2) == BraidWord{3, {2, 1, 2}});
  CHECK(braidpoly::rotated(w, 3) == w);
}

TEST_CASE("least_rotation_index picks the lexicographic minimum") {
  CHECK(braidpoly::least_rotation_index({2, 1, 1}) == 1);
  CHECK(braidpoly::least_rotation_index({1, 1, 2}) == 0);
  CHECK(braidpoly::least_rotation_index({}) == 0);
}

TEST_CASE("canonical_key merges rotations and separates strand counts") {
  const auto key = [](const BraidWord& w) { return braidpoly::canonical_key(w); };
  CHECK(key(BraidWord{3, {2, 1, 1}}) == key(BraidWord{3, {1, 1, 2}}));
  CHECK(key(BraidWord{3, {1, 2}}) == key(BraidWord{3, {2, 1}}));
  CHECK(key(BraidWord{2, {1}}) != key(BraidWord{3, {1}}));
  CHECK(key(BraidWord{3, {1, 2}}) != key(BraidWord{3, {1, 1}}));

  const BraidWord w{4, {1, 3, 2, 2, 1, 3}};
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    CHECK(key(braidpoly::rotated(w, k)) == key(w));
  }
}

TEST_CASE("index_counts tallies occurrences by absolute index") {
  const std::vector<int> counts =
      braidpoly::index_counts(BraidWord{4, {1, -3, 3, 1, 1}});
  REQUIRE(counts.size() == 4);
  CHECK(counts[1] == 3);
  CHECK(counts[2] == 0);
  CHECK(counts[3] == 2);
}

TEST_CASE("component count matches the exponent-sum parity identity") {
  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int len = static_cast<int>(rng() % 11);
    BraidWord w{n, {}};
    for (int i = 0; i < len; ++i) {
      const int idx = 1 + static_cast<int>(rng() % (n - 1));
      w.letters.push_back((rng() % 2) ? idx : -idx);
    }
    const int components = braidpoly::closure_components(w);
    CAPTURE(braidpoly::to_text(w));
    CHECK((components - (w.strands - braidpoly::exponent_sum(w))) % 2 == 0);
  }
}

TEST_CASE("closure_permutation tracks strand endpoints") {
  CHECK(braidpoly::closure_permutation(BraidWord{3, {}}) ==
        std::vector<int>{0, 1, 2});
  CHECK(braidpoly::closure_permutation(BraidWord{2, {1}}) ==
        std::vector<int>{1, 0});
  CHECK(braidpoly::closure_permutation(BraidWord{3, {1, 2}}).size() == 3);
}
