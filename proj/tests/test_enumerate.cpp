#include "regdig/enumerate.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <set>
#include <stdexcept>
#include <vector>

using oracles::make_graph;
using namespace regdig;

namespace {

EnumerationFilter no_multiarcs() {
  EnumerationFilter f;
  f.forbid_multiarcs = true;
  return f;
}

EnumerationFilter simple_only() {
  EnumerationFilter f;
  f.forbid_multiarcs = true;
  f.forbid_loops = true;
  return f;
}

EnumerationFilter connected_only() {
  EnumerationFilter f;
  f.connected_only = true;
  return f;
}

}  // namespace

TEST_CASE("enumerate_unlabeled yields the documented class counts") {
  CHECK(enumerate_unlabeled(3, 2).size() == 8);
  CHECK(enumerate_unlabeled(4, 2, no_multiarcs()).size() == 8);
  CHECK(enumerate_unlabeled(5, 2, simple_only()).size() == 5);
  auto empty = enumerate_unlabeled(0, 2);
  REQUIRE(empty.size() == 1);
  CHECK(empty.front().graph == Digraph(0));
  CHECK(empty.front().aut_order == 1);
  CHECK(empty.front().components == 0);
}

TEST_CASE("enumerate_unlabeled matches the brute class sets") {
  for (int n = 0; n <= 4; ++n)
    for (int k = 1; k <= 2; ++k)
      for (const auto& filter :
           {EnumerationFilter{}, no_multiarcs(), simple_only()}) {
        auto records = enumerate_unlabeled(n, k, filter);
        auto classes = oracles::brute_class_set(n, k, filter);
        REQUIRE(records.size() == classes.size());
        for (const auto& rec : records) REQUIRE(classes.count(rec.graph.cells) == 1);
      }
}

TEST_CASE("connected_only keeps exactly the one-component classes") {
  for (int n = 1; n <= 4; ++n) {
    auto connected = enumerate_unlabeled(n, 2, connected_only());
    std::size_t expected = 0;
    for (const auto& rec : enumerate_unlabeled(n, 2))
      if (rec.components == 1) ++expected;
    CHECK(connected.size() == expected);
    for (const auto& rec : connected) CHECK(rec.components == 1);
  }
  CHECK(enumerate_unlabeled(2, 2, connected_only()).size() == 2);
}

TEST_CASE("records come out sorted and with consistent fields") {
  auto records = enumerate_unlabeled(5, 2);
  for (std::size_t i = 1; i < records.size(); ++i)
    REQUIRE(records[i - 1].graph < records[i].graph);
  for (const auto& rec : records) {
    REQUIRE(rec.graph == canonical_form(rec.graph));
    REQUIRE(is_k_regular(rec.graph, 2));
    CHECK(rec.aut_order == automorphism_group(rec.graph).order);
    CHECK(rec.cycle_index == cycle_index_of(rec.graph));
    CHECK(rec.components == weak_components(rec.graph).count);
    CHECK(rec.loops == loop_count(rec.graph));
    CHECK(rec.multiarcs == multiarc_count(rec.graph));
  }
}

TEST_CASE("1-regular classes are the partitions of n") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(BigInt(enumerate_unlabeled(n, 1).size()) == partition_count(n));
    CHECK(enumerate_unlabeled(n, 1, connected_only()).size() == 1);
  }
}

TEST_CASE("enumeration is deterministic across worker counts") {
  EnumerateOptions serial;
  serial.workers = 1;
  EnumerateOptions wide;
  wide.workers = 4;
  auto a = enumerate_unlabeled(6, 2, {}, serial);
  auto b = enumerate_unlabeled(6, 2, {}, wide);
  auto c = enumerate_unlabeled(6, 2);
  REQUIRE(a.size() == 397);
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("an exhausted time budget raises budget_exceeded") {
  EnumerateOptions opt;
  opt.time_budget = std::chrono::seconds(0);
  CHECK_THROWS_AS(enumerate_unlabeled(7, 2, {}, opt), budget_exceeded);
}

TEST_CASE("enumerate_unlabeled validates its arguments") {
  CHECK_THROWS_AS(enumerate_unlabeled(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_unlabeled(17, 2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_unlabeled(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_unlabeled(3, 0), std::invalid_argument);
}

TEST_CASE("count_labeled matches the closed forms and the brute sweep") {
  CHECK(count_labeled(3, 2) == 21);
  CHECK(count_labeled(7, 2) == 9135630);
  CHECK(count_labeled(4, 1) == 24);
  CHECK(count_labeled(0, 1) == 1);
  CHECK(count_labeled(0, 2) == 1);
  CHECK_THROWS_AS(count_labeled(3, 3), std::invalid_argument);
  for (int n = 0; n <= 5; ++n)
    for (int k = 1; k <= 2; ++k)
      CHECK(count_labeled(n, k) == BigInt(oracles::all_labeled(n, k).size()));
}

TEST_CASE("classify_by_components tabulates one row") {
  CountTable t = classify_by_components(enumerate_unlabeled(4, 2));
  CHECK(t.at(4, 1) == 14);
  CHECK(t.at(4, 2) == 8);
  CHECK(t.at(4, 3) == 2);
  CHECK(t.at(4, 4) == 1);
  CHECK(t.entries.size() == 4);

  CHECK(classify_by_components({}).entries.empty());

  std::vector<GraphRecord> mixed{make_record(make_graph({{2}})),
                                 make_record(make_graph({{0, 2}, {2, 0}}))};
  CHECK_THROWS_AS(classify_by_components(mixed), std::invalid_argument);
}
