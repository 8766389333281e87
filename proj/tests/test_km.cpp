#include <doctest.h>

#include "genuslab/errors.hpp"
#include "genuslab/km.hpp"

using namespace genuslab;

namespace {

BigInt pow_product(std::initializer_list<std::pair<unsigned, unsigned>> pf) {
  BigInt v = 1;
  for (auto [p, e] : pf) v *= boost::multiprecision::pow(BigInt(p), e);
  return v;
}

}  // namespace

TEST_CASE("corner counts on the starting path") {
  const Embedding path = path_tree_embedding(5);
  CHECK(trace_faces(path).size() == 1);
  CHECK(corner_count(path, 1) == 1);
  CHECK(corner_count(path, 2) == 1);
  CHECK(corner_count(path, 3) == 2);
  CHECK(count_vtype_ways(path, {1, 2, 3}) == std::array<int, 3>{1, 1, 2});

  const Embedding after = insert_vtype_one_face(path, {1, 2, 3});
  CHECK(trace_faces(after).size() == 1);
  CHECK(corner_count(after, 1) == 3);
  CHECK(after.graph.edge_count() == 6);
}

TEST_CASE("every corner choice of a V-type insertion keeps one face") {
  const Embedding path = path_tree_embedding(6);
  const VTypeEdge vt{2, 4, 6};
  const auto ways = count_vtype_ways(path, vt);
  for (int a = 0; a < ways[0]; ++a)
    for (int b = 0; b < ways[1]; ++b)
      for (int c = 0; c < ways[2]; ++c) CHECK(trace_faces(insert_vtype_one_face(path, vt, {a, b, c})).size() == 1);
  CHECK(trace_faces(insert_edge_two_face(path, 1, 4)).size() == 2);
  CHECK_THROWS(VTypeEdge{1, 1, 2}.validate(5));
  CHECK_THROWS(VTypeEdge{1, 2, 9}.validate(5));
}

TEST_CASE("step rendering") {
  CHECK(InsertionStep::v(1, 2, 3, {1, 1, 2}).text() == "V_1^{2,3} : 1 x 1 x 2");
  CHECK(InsertionStep::e(5, 7, {6, 6}).text() == "e^{5,7} : 6 x 6");
  CHECK(FactoredCount::of({{2, 3}, {4}}).factorization_text() == "2^3 * 3");
  CHECK(FactoredCount::of({{2, 3}, {4}}).value == 24);
}

TEST_CASE("published schedules replay with their counts") {
  const std::map<int, BigInt> expected{
      {5, 432},
      {6, 663552},
      {7, BigInt(49766400000ull)},
      {8, pow_product({{2, 26}, {3, 11}, {5, 5}})},
      {9, pow_product({{2, 27}, {3, 12}, {5, 7}, {7, 6}})},
      {10, pow_product({{2, 52}, {3, 15}, {5, 7}, {7, 6}})},
  };
  const std::map<int, std::pair<int, int>> faces_genus{{5, {1, 3}}, {6, {1, 5}}, {7, {2, 7}},
                                                       {8, {2, 10}}, {9, {1, 14}}, {10, {1, 18}}};
  for (const auto& [m, value] : expected) {
    CAPTURE(m);
    const auto r = replay_schedule(builtin_schedule(m));
    CHECK(r.count.value == value);
    CHECK(static_cast<int>(trace_faces(r.embedding).size()) == faces_genus.at(m).first);
    CHECK(genus_of(r.embedding) == faces_genus.at(m).second);
    CHECK(r.embedding.graph.edge_count() == static_cast<std::size_t>(m * (m - 1) / 2));
  }
  CHECK(replay_schedule(builtin_schedule(8)).count.factorization_text() == "2^26 * 3^11 * 5^5");
  CHECK_THROWS(builtin_schedule(4));
  CHECK_THROWS(builtin_schedule(11));
}

TEST_CASE("an altered tuple is rejected") {
  auto s = builtin_schedule(7);
  s.steps[1].multiplicities[0] += 1;
  CHECK_THROWS_AS(replay_schedule(s), ScheduleMismatch);

  auto short_s = builtin_schedule(6);
  short_s.steps.pop_back();
  CHECK_THROWS_AS(replay_schedule(short_s), std::invalid_argument);
}

TEST_CASE("the step algorithm") {
  for (int m : {3, 4, 5, 7, 8, 10, 11, 12, 13, 15, 16, 18}) {
    CAPTURE(m);
    const auto run = run_paper_algorithm(m);
    CHECK(run.succeeded);
    CHECK(run.failure.empty());
    CHECK(run.embedding.graph.edge_count() == static_cast<std::size_t>(m * (m - 1) / 2));
    CHECK(run.genus == genus_of(run.embedding));
    CHECK(run.faces <= 2);
  }
  for (int m : {6, 9, 14, 17}) {
    CAPTURE(m);
    const auto run = run_paper_algorithm(m);
    CHECK_FALSE(run.succeeded);
    CHECK(run.failure.find("stuck at step") != std::string::npos);
  }
}

TEST_CASE("every corner placement of the K5 schedule") {
  const auto census = enumerate_placements(builtin_schedule(5));
  CHECK(census.replays == 432);
  CHECK(census.distinct_rotations == 432);
  CHECK(census.genus_counts == std::map<int, std::uint64_t>{{3, 432}});
}

TEST_CASE("nonincreasing insertion on a two-face embedding") {
  const auto r = replay_schedule(builtin_schedule(7));
  REQUIRE(trace_faces(r.embedding).size() == 2);
  const Embedding after = insert_vtype_nonincreasing(r.embedding, {1, 2, 3});
  CHECK(trace_faces(after).size() <= 2);
}

TEST_CASE("Stahl counts") {
  const auto s8 = stahl_bound(8);
  CHECK(s8.first == BigInt(3317760000ull));
  REQUIRE(s8.second);
  CHECK(*s8.second == BigRational(BigInt("1547934105600000000"), BigInt(49)));
  CHECK(stahl_bound(7).first == 13824);
  CHECK_FALSE(stahl_bound(6).second);
  CHECK_THROWS(stahl_bound(5));
}
