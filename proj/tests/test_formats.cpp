#include "regdig/formats.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

using oracles::make_graph;
using namespace regdig;

namespace {

std::string thrown_message(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("cycle_index_to_text follows the Reg grammar") {
  CHECK(cycle_index_to_text(cycle_index_of(make_graph({{0, 2}, {2, 0}}))) == "(t1^2+t2)/2");
  CHECK(cycle_index_to_text(cycle_index_of(make_graph({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}))) ==
        "(t1^3+2t3)/3");
  CHECK(cycle_index_to_text(cycle_index_of(make_graph({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}))) ==
        "(t1^3+3t1t2+2t3)/6");
  CHECK(cycle_index_to_text(cycle_index_of(Digraph(0))) == "(1)/1");
  CHECK_THROWS_AS(cycle_index_to_text(CycleIndex{}), std::invalid_argument);
}

TEST_CASE("parse_cycle_index inverts the renderer") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& rec : enumerate_unlabeled(n, 2)) {
      std::string text = cycle_index_to_text(rec.cycle_index);
      REQUIRE(parse_cycle_index(text) == rec.cycle_index);
    }

  CycleIndex empty_graph = parse_cycle_index("(1)/1");
  CHECK(empty_graph.denominator == 1);
  REQUIRE(empty_graph.terms.size() == 1);
  CHECK(empty_graph.terms.begin()->first.empty());
}

TEST_CASE("parse_cycle_index rejects malformed input") {
  for (const char* bad : {"", "t1/1", "()/1", "(t0)/1", "(t1^0)/2", "(t1+t2)/2", "(t1t1)/1",
                          "(t2)/1x", "(t1)/", "(t1", "(t1 +t2)/2"})
    CHECK_THROWS_AS(parse_cycle_index(bad), std::invalid_argument);
}

TEST_CASE("term_text spells out the Riemann factors") {
  CHECK(term_text(render_term(make_graph({{2}}))) == "R[^a^b_a_b]");
  CHECK(term_text(render_term(make_graph({{0, 2}, {2, 0}}))) == "R[^c^d_a_b] R[^a^b_c_d]");
  CHECK(term_text(TensorTerm{}) == "");

  // the three n = 2 classes each stand for exactly one labeled term
  for (const auto& rec : enumerate_unlabeled(2, 2))
    CHECK(labeled_count(rec.cycle_index, 2) == 1);
}

TEST_CASE("write_reg emits two exact lines per record") {
  CHECK(write_reg(enumerate_unlabeled(1, 2)) == "[0,0][0,0]\nV1 2 (t1)/1\n");
  CHECK(write_reg({}) == "");

  std::string n4 = write_reg(enumerate_unlabeled(4, 2));
  std::size_t multiarc_free = 0, simple = 0;
  for (std::size_t pos = 0; (pos = n4.find("\nV0", pos)) != std::string::npos; ++pos)
    ++multiarc_free;
  for (std::size_t pos = 0; (pos = n4.find("\nV0 0 ", pos)) != std::string::npos; ++pos)
    ++simple;
  CHECK(multiarc_free == 8);
  CHECK(simple == 2);

  std::vector<GraphRecord> mixed{make_record(make_graph({{2}})),
                                 make_record(make_graph({{0, 2}, {2, 0}}))};
  CHECK_THROWS_AS(write_reg(mixed), std::invalid_argument);
}

TEST_CASE("read_reg reconstructs records and validates the V line") {
  auto records = read_reg("[0,1][0,1][1,0][1,0]\nV2 0 (t1^2+t2)/2\n");
  REQUIRE(records.size() == 1);
  CHECK(records[0].graph == make_graph({{0, 2}, {2, 0}}));
  CHECK(records[0].multiarcs == 2);
  CHECK(records[0].loops == 0);
  CHECK(records[0].aut_order == 2);

  // whitespace between and inside bracket pairs is fine
  auto spaced = read_reg(" [0,1] [ 0 , 1 ]\t[1,0][1,0]\nV2 0 (t1^2+t2)/2\n");
  CHECK(spaced == records);

  // the representative is kept as read, canonical or not
  auto skew = read_reg("[0,1][0,1]\nV1 0 (t1^2)/1\n");
  REQUIRE(skew.size() == 1);
  CHECK(skew[0].graph == make_graph({{0, 2}, {0, 0}}));

  CHECK(read_reg("").empty());
}

TEST_CASE("read_reg reports errors with line numbers") {
  CHECK(thrown_message([] { (void)read_reg("[0,1][0\nV0 0 (t1^2+t2)/2\n"); }).starts_with("line 1:"));
  CHECK(thrown_message([] { (void)read_reg("[0,0][0,0]\n"); }).starts_with("line 1:"));
  CHECK(thrown_message([] { (void)read_reg("[0,0][0,0]\nV0 2 (t1)/1\n"); }).starts_with("line 2:"));
  CHECK(thrown_message([] { (void)read_reg("[0,0][0,0]\nV1 0 (t1)/1\n"); }).starts_with("line 2:"));
  CHECK(thrown_message([] { (void)read_reg("[0,0][0,0]\nV1 2 (t1^2+t2)/2\n"); })
            .starts_with("line 2:"));
  CHECK(thrown_message([] {
          (void)read_reg("[0,0][0,0]\nV1 2 (t1)/1\n[0,1][0,1][1,0][1,0]\nV2 0 bogus\n");
        }).starts_with("line 4:"));
}

TEST_CASE("reg files round trip byte for byte") {
  for (int n = 0; n <= 4; ++n) {
    auto records = enumerate_unlabeled(n, 2);
    std::string bytes = write_reg(records);
    auto reread = read_reg(bytes);
    REQUIRE(reread == records);
    REQUIRE(write_reg(reread) == bytes);
  }
}

TEST_CASE("export_dot declares nodes then arcs") {
  CHECK(export_dot(make_graph({{0, 2}, {2, 0}}), 1) ==
        "digraph g1 {\n  0;\n  1;\n  0 -> 1;\n  0 -> 1;\n  1 -> 0;\n  1 -> 0;\n}\n");
  CHECK(export_dot(Digraph(0)) == "digraph g0 {\n}\n");
}

TEST_CASE("export_table lays out count tables as TSV") {
  CountTable t = assemble_unlabeled_table(enumerate_range(4, 2));
  t.entries.erase({0, 0});
  std::string tsv = export_table(t);
  CHECK(tsv ==
        "n\t1\t2\t3\t4\ttotal\n"
        "1\t1\t\t\t\t1\n"
        "2\t2\t1\t\t\t3\n"
        "3\t5\t2\t1\t\t8\n"
        "4\t14\t8\t2\t1\t25\n");
  CHECK(export_table(CountTable{}) == "n\ttotal\n");
}

TEST_CASE("export_table lays out rooted tables as TSV") {
  auto rows = rooted_table(enumerate_range(2, 2));
  rows.erase(rows.begin());  // drop the n = 0 slot
  CHECK(export_table(rows, 1) ==
        "n\t0\t1\t2\n"
        "1\t1\t1\t\n"
        "2\t3\t3\t3\n");
  CHECK(export_table(std::vector<RootedPolynomial>{}, 1) == "n\n");
}
