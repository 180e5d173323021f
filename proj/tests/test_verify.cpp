#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "braidpoly/braid_word.hpp"
#include "braidpoly/catalog.hpp"
#include "braidpoly/errors.hpp"
#include "braidpoly/verify.hpp"

using braidpoly::BraidWord;
using braidpoly::SweepOptions;
using braidpoly::SweepReport;

TEST_CASE("enumerate_positive_words lists canonical representatives in order") {
  const auto small = braidpoly::enumerate_positive_words(2, 4);
  const std::vector<BraidWord> expected{
      {1, {}},          {2, {}},          {2, {1}},
      {2, {1, 1}},      {2, {1, 1, 1}},   {2, {1, 1, 1, 1}},
  };
  CHECK(small == expected);

  const auto words = braidpoly::enumerate_positive_words(3, 8);
  CHECK(words.size() == 104);

  std::vector<BraidWord> two_len3;
  std::vector<BraidWord> three_len2;
  for (const BraidWord& w : words) {
    if (w.strands == 2 && w.letters.size() == 3) two_len3.push_back(w);
    if (w.strands == 3 && w.letters.size() == 2) three_len2.push_back(w);
  }
  CHECK(two_len3 == std::vector<BraidWord>{{2, {1, 1, 1}}});
  CHECK(three_len2 ==
        std::vector<BraidWord>{{3, {1, 1}}, {3, {1, 2}}, {3, {2, 2}}});

  std::set<std::string> keys;
  for (const BraidWord& w : words) {
    if (!w.letters.empty()) CHECK(braidpoly::least_rotation_index(w.letters) == 0);
    keys.insert(braidpoly::canonical_key(w));
  }
  CHECK(keys.size() == words.size());

  CHECK(braidpoly::enumerate_positive_words(4, 10).size() == 9778);
}

TEST_CASE("named_examples carries the two study braids and both families") {
  const auto named = braidpoly::named_examples();
  CHECK(named.size() == 20);

  std::set<std::string> names;
  for (const auto& [name, word] : named) names.insert(name);
  CHECK(names.size() == named.size());

  auto find = [&](const std::string& name) -> const BraidWord& {
    for (const auto& entry : named)
      if (entry.first == name) return entry.second;
    REQUIRE(false);
    return named.front().second;
  };
  CHECK(find("cable_T23") ==
        BraidWord{4, {2, 1, 3, 2, 2, 1, 3, 2, 2, 1, 3, 2, -1, -1, -1}});
  CHECK(find("baker_kegel") ==
        BraidWord{4, {2, 1, 3, 2, 2, 1, 3, 2, 2, 1, 3, 2, -1, 2, 1, 1, 2}});
  CHECK(find("T_2_3") == BraidWord{2, {1, 1, 1}});
  CHECK(find("H_2") == BraidWord{3, {1, 1, 2, 2}});
}

TEST_CASE("a small all-positive sweep passes with the expected tallies") {
  SweepOptions options;
  options.max_strands = 3;
  options.max_length = 8;
  const SweepReport report = braidpoly::verify_sweep(options);

  CHECK(report.all_pass());
  CHECK(report.words == 104);
  CHECK(report.knots == 39);
  CHECK(report.informational == 0);
  CHECK(report.theorem_failures == 0);
  CHECK(report.corollary_failures == 0);
  CHECK(report.oracle_failures == 0);
  CHECK(report.grid_p_mismatches == 0);
  CHECK(report.memo_checks == 7);
  CHECK(report.memo_failures == 0);
  CHECK(report.errors == 0);
  CHECK(report.failure_keys.empty());
  CHECK(report.memo_entries > 0);
  CHECK(report.jsonl.size() == 104);

  // One record per word, sorted by canonical key.
  std::vector<std::string> keys;
  for (const std::string& line : report.jsonl) {
    const auto record = nlohmann::json::parse(line);
    keys.push_back(record.at("key").get<std::string>());
    CHECK(record.at("status").get<std::string>() == "ok");
    CHECK(record.at("informational").get<bool>() == false);
  }
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(std::set<std::string>(keys.begin(), keys.end()).size() == keys.size());

  const std::string summary = braidpoly::human_summary(report);
  CHECK(summary.find("result:") != std::string::npos);
  CHECK(summary.find("PASS") != std::string::npos);
}

TEST_CASE("the named-example sweep reports the study braids as informational") {
  SweepOptions options;
  options.families = {"named_examples"};
  const SweepReport report = braidpoly::verify_sweep(options);

  CHECK(report.all_pass());
  // T_2_2 and H_1 share a canonical class, so 20 names give 19 words.
  CHECK(report.words == 19);
  CHECK(report.knots == 8);
  CHECK(report.informational == 2);

  bool saw_baker_kegel = false;
  for (const std::string& line : report.jsonl) {
    const auto record = nlohmann::json::parse(line);
    if (record.value("name", std::string{}) != "baker_kegel") continue;
    saw_baker_kegel = true;
    CHECK(record.at("informational").get<bool>() == true);
    CHECK(record.at("status").get<std::string>() == "ok");
    CHECK(record.at("profile_source").get<std::string>() == "alexander_span");
    CHECK(record.at("profile").at("genus").get<int>() == 6);
    CHECK(record.at("profile").at("components").get<int>() == 1);
    CHECK(record.at("grid").at("nonnegative").get<bool>() == false);
    CHECK(record.at("theorem").at("items_a_to_f_pass").get<bool>() == true);
  }
  CHECK(saw_baker_kegel);
}

TEST_CASE("the torus family sweep covers T(2,1) through T(2,12)") {
  SweepOptions options;
  options.families = {"torus_2k"};
  const SweepReport report = braidpoly::verify_sweep(options);
  CHECK(report.all_pass());
  CHECK(report.words == 12);
  CHECK(report.knots == 6);
  CHECK(report.informational == 0);
}

TEST_CASE("sweep reports are deterministic and independent of the job count") {
  SweepOptions options;
  options.max_strands = 3;
  options.max_length = 6;

  const SweepReport first = braidpoly::verify_sweep(options);
  const SweepReport second = braidpoly::verify_sweep(options);
  CHECK(first.jsonl == second.jsonl);

  options.jobs = 2;
  const SweepReport parallel = braidpoly::verify_sweep(options);
  CHECK(parallel.jsonl == first.jsonl);
  CHECK(parallel.words == first.words);
  CHECK(parallel.knots == first.knots);
}

TEST_CASE("unknown family names are rejected") {
  SweepOptions options;
  options.families = {"torus_3k"};
  CHECK_THROWS_AS(braidpoly::verify_sweep(options), braidpoly::ParseError);
}
