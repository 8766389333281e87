#include <doctest.h>

#include <random>

#include "genuslab/errors.hpp"
#include "genuslab/surface_word.hpp"

using namespace genuslab;

TEST_CASE("parsing and rendering") {
  const auto w = parse_word("a a-");
  CHECK(w.polygons().size() == 1);
  CHECK(w.pair_count() == 1);
  CHECK(render_word(parse_word("a b a- b-")) == "a b a- b-");
  CHECK(render_word(parse_word("(x a)(a- x-)")) == "(x a)(a- x-)");
  CHECK_THROWS_WITH_AS(parse_word("a b a- b"), doctest::Contains("orientab"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a a a-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("c#1 c#1-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("(a a-"), std::invalid_argument);
}

TEST_CASE("transform 1") {
  CHECK(render_word(apply_transform1(parse_word("x a a- x-"), 0, 1)) == "x x-");
  CHECK_THROWS(apply_transform1(parse_word("x a x- a-"), 0, 0));
}

TEST_CASE("transform 2 merges a parallel run into a fresh symbol") {
  const auto w = apply_transform2(parse_word("x a b y b- a- y- x-"), 0, 1, 4);
  CHECK(w.pair_count() == 3);
  CHECK(genus_oracle(w) == genus_oracle(parse_word("x a b y b- a- y- x-")));
  const auto rendered = render_word(w);
  CHECK(rendered.find("c#") != std::string::npos);
  CHECK_THROWS(apply_transform2(parse_word("a b a- b-"), 0, 0, 2));
}

TEST_CASE("transform 3") {
  CHECK(render_word(apply_transform3(parse_word("(x a)(a- x-)"), 0, 1, "a")) == "x x-");
  CHECK_THROWS(apply_transform3(parse_word("(x a)(a- x-)"), 0, 1, "b"));
}

TEST_CASE("transform 4") {
  const auto w = apply_transform4(parse_word("a b a- b-"), 0, "a", "b");
  CHECK(render_word(w) == "a b a- b-");
  CHECK_THROWS(apply_transform4(parse_word("a b b- a-"), 0, "a", "b"));
  // A a B b C a- D b- E -> A D C B E a b a- b-
  const auto v = apply_transform4(parse_word("p a q b r a- s b- t p- q- r- s- t-"), 0, "a", "b");
  CHECK(render_word(v) == "p s r q t p- q- r- s- t- a b a- b-");
}

TEST_CASE("interlacing") {
  const auto w = parse_word("a b a- b-");
  CHECK(is_interlaced(w, "a", "b"));
  CHECK_FALSE(is_interlaced(parse_word("a b b- a-"), "a", "b"));
  CHECK_FALSE(is_interlaced(parse_word("a a- b b-"), "a", "b"));
  CHECK(is_interlaced(parse_word("b a- b- a"), "a", "b"));
  CHECK_THROWS(is_interlaced(parse_word("(a b)(b- a-)"), "a", "b"));
}

TEST_CASE("reduction") {
  CHECK(reduce_to_standard(parse_word("a a-")).genus == 0);
  const auto torus = reduce_to_standard(parse_word("a b a- b-"));
  CHECK(torus.genus == 1);
  CHECK(torus.standard_form() == "a1 b1 a1- b1-");
  CHECK(reduce_to_standard(parse_word("a b a- b- c d c- d-")).genus == 2);
  CHECK(reduce_to_standard(parse_word("(a b a- c)(c- b-)")).genus == 1);
  CHECK(standard_form(0) == "a0 a0-");
  CHECK(standard_form(2) == "a1 b1 a1- b1- a2 b2 a2- b2-");
  CHECK(reduce_to_standard(parse_word("a b c a- b- c-")).genus == 1);
}

TEST_CASE("corner oracle") {
  CHECK(genus_oracle(parse_word("a a-")) == 0);
  CHECK(genus_oracle(parse_word("a b a- b-")) == 1);
  CHECK(genus_oracle(parse_word("a b c a- b- c-")) == 1);
  CHECK(genus_oracle(parse_word("a b c d a- b- c- d-")) == 2);
  CHECK_THROWS(genus_oracle(parse_word("(a b)(b- a-)")));
}

TEST_CASE("reduction agrees with the oracle and with re-readings") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const int pairs = 1 + i % 8;
    const auto w = random_orientable_word(pairs, rng);
    const int g = genus_oracle(w);
    const auto r = reduce_to_standard(w);
    REQUIRE(r.genus == g);
    CHECK(static_cast<int>(r.handles.size()) == g);
    CHECK(genus_oracle(reversed_inverse(w)) == g);
    auto poly = w.polygons().front();
    std::rotate(poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(i % poly.size()), poly.end());
    CHECK(genus_oracle(OrientedWordSystem({poly})) == g);
  }
}

TEST_CASE("every transform preserves the oracle genus") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const auto w = random_orientable_word(2 + i % 7, rng);
    const int g = genus_oracle(w);
    const auto& p = w.polygons().front();
    for (std::size_t pos = 0; pos + 1 < p.size(); ++pos) {
      if (p[pos].symbol == p[pos + 1].symbol) CHECK(genus_oracle(apply_transform1(w, 0, pos)) == g);
    }
    for (std::size_t s = 0; s < p.size(); ++s) {
      for (std::size_t t = s + 1; t < p.size(); ++t) {
        if (p[s].inverse || p[t].inverse || !is_interlaced(w, p[s].symbol, p[t].symbol)) continue;
        const auto v = apply_transform4(w, 0, p[s].symbol, p[t].symbol);
        // Residue carries one handle fewer than the original.
        CHECK(reduce_to_standard(v).genus == g);
      }
    }
  }
}

TEST_CASE("trace replays to the standard form") {
  const auto r = reduce_to_standard(parse_word("x a b x- c a- b- c-"));
  REQUIRE_FALSE(r.trace.empty());
  for (const auto& step : r.trace) {
    CHECK(step.transform >= 1);
    CHECK(step.transform <= 4);
  }
  CHECK(reduce_to_standard(parse_word(r.trace.back().word_after)).genus == r.genus);
}
