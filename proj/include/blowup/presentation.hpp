#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "blowup/exact_algebra.hpp"

namespace blowup {

// A single letter g^e with e = +1 or -1.
struct Letter {
  std::size_t generator = 0;
  int exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  // For Wirtinger presentations: component index -> meridian generator.
  std::optional<std::vector<std::size_t>> meridian_markers;

  std::size_t num_generators() const noexcept { return generators.size(); }

  // Throws Errc::InvalidPresentation on out-of-range letters or exponents
  // other than +-1.
  void validate() const;
};

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
// g^n expanded into |n| letters.
Word power(std::size_t generator, long n);
// a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

// 1-based signed letters (+2 means x2, -2 means x2^-1).
Word word_from_signed(const std::vector<long>& letters, std::size_t num_generators);
std::vector<long> to_signed(const Word& w);

std::vector<std::string> default_generator_names(std::size_t n, const std::string& stem = "x");

// Rows are relators, columns generators, entries exponent sums.
algebra::IntMatrix abelianization_matrix(const Presentation& p);
algebra::AbelianGroup abelianization(const Presentation& p);

// Generators of b are shifted past those of a; meridian markers are dropped.
Presentation free_product(const Presentation& a, const Presentation& b);

}  // namespace blowup
