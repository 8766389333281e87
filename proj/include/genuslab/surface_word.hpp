#pragma once

// Polygon words for orientable surfaces and the four classical rewrites:
//   T1  A a a- ~ A
//   T2  A a b B b- a- ~ A c B c-
//   T3  (A a)(a- B) ~ (A B)
//   T4  A a B b C a- D b- E ~ A D C B E a b a- b-
// Polygons are cyclic; positions index the stored linearization.

#include <array>
#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace genuslab {

struct Letter {
  std::string symbol;
  bool inverse = false;

  Letter inverted() const { return Letter{symbol, !inverse}; }
  std::string text() const { return inverse ? symbol + "-" : symbol; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Polygon = std::vector<Letter>;
using Handle = std::array<Letter, 4>;

class OrientedWordSystem {
 public:
  /// Throws std::invalid_argument unless every symbol occurs exactly twice,
  /// once with each sign.
  explicit OrientedWordSystem(std::vector<Polygon> polygons);

  const std::vector<Polygon>& polygons() const noexcept { return polygons_; }
  std::size_t pair_count() const noexcept;

  friend bool operator==(const OrientedWordSystem&, const OrientedWordSystem&) = default;

 private:
  std::vector<Polygon> polygons_;
};

/// Symbols are runs of letters, digits and '_', inverse marked by a trailing
/// '-'. With more than one polygon each is wrapped in parentheses.
OrientedWordSystem parse_word(std::string_view text);
std::string render_word(const OrientedWordSystem& w);
std::string render_letters(const std::vector<Letter>& letters);

OrientedWordSystem apply_transform1(const OrientedWordSystem& w, std::size_t polygon, std::size_t position);
/// `first` and `second` are the starting positions of the pairs "a b" and "b- a-".
OrientedWordSystem apply_transform2(const OrientedWordSystem& w, std::size_t polygon, std::size_t first,
                                    std::size_t second);
/// Merges the polygon holding `symbol` with the one holding its inverse.
OrientedWordSystem apply_transform3(const OrientedWordSystem& w, std::size_t first_polygon,
                                    std::size_t second_polygon, const std::string& symbol);
/// Rewrites the interlaced pair (s, t) and appends the handle block at the end.
OrientedWordSystem apply_transform4(const OrientedWordSystem& w, std::size_t polygon, const std::string& s,
                                    const std::string& t);

/// Both symbols must sit in one polygon.
bool is_interlaced(const OrientedWordSystem& w, const std::string& s, const std::string& t);

struct TransformStep {
  int transform = 0;        // 1..4
  std::string detail;
  std::string word_after;   // residue followed by the handles extracted so far
};

struct Reduction {
  int genus = 0;
  std::vector<Handle> handles;
  std::vector<TransformStep> trace;

  std::string standard_form() const;
};

/// Merge polygons with T3 until one remains, then repeatedly cancel adjacent
/// inverse pairs with T1 and extract the first interlaced pair (scan order)
/// with T4 until the residue is empty.
Reduction reduce_to_standard(const OrientedWordSystem& w);

/// Genus from the Euler characteristic of the glued polygon:
/// corners identified under the side pairing give V, pairs give E, one face.
int genus_oracle(const OrientedWordSystem& w);

/// "a0 a0-" for the sphere, otherwise a1 b1 a1- b1- ... ap bp ap- bp-.
std::string standard_form(int genus);

OrientedWordSystem random_orientable_word(int pairs, std::mt19937_64& rng);
/// Every letter inverted and the order reversed, polygon by polygon.
OrientedWordSystem reversed_inverse(const OrientedWordSystem& w);

}  // namespace genuslab
