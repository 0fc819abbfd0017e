#include "blowup/presentation.hpp"

#include <cstdlib>

namespace blowup {

void Presentation::validate() const {
  for (const auto& r : relators)
    for (const auto& l : r) {
      if (l.generator >= generators.size())
        throw Error(Errc::InvalidPresentation, "relator references an unknown generator");
      if (l.exponent != 1 && l.exponent != -1)
        throw Error(Errc::InvalidPresentation, "letter exponents must be +-1");
    }
  if (meridian_markers)
    for (auto g : *meridian_markers)
      if (g >= generators.size())
        throw Error(Errc::InvalidPresentation, "meridian marker references an unknown generator");
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->generator, -it->exponent});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word power(std::size_t generator, long n) {
  Word out;
  const int e = n < 0 ? -1 : 1;
  for (long k = 0; k < std::labs(n); ++k) out.push_back({generator, e});
  return out;
}

Word commutator(const Word& a, const Word& b) {
  return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

Word word_from_signed(const std::vector<long>& letters, std::size_t num_generators) {
  Word w;
  w.reserve(letters.size());
  for (long v : letters) {
    const auto g = static_cast<std::size_t>(std::labs(v));
    if (v == 0 || g > num_generators)
      throw Error(Errc::InvalidPresentation,
                  "letter " + std::to_string(v) + " out of range for " +
                      std::to_string(num_generators) + " generators");
    w.push_back({g - 1, v > 0 ? 1 : -1});
  }
  return w;
}

std::vector<long> to_signed(const Word& w) {
  std::vector<long> out;
  out.reserve(w.size());
  for (const auto& l : w) {
    const long g = static_cast<long>(l.generator) + 1;
    out.push_back(l.exponent > 0 ? g : -g);
  }
  return out;
}

std::vector<std::string> default_generator_names(std::size_t n, const std::string& stem) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

algebra::IntMatrix abelianization_matrix(const Presentation& p) {
  algebra::IntMatrix m(p.relators.size(), p.generators.size(), 0);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const auto& l : p.relators[r]) m(r, l.generator) += l.exponent;
  return m;
}

algebra::AbelianGroup abelianization(const Presentation& p) {
  return algebra::cokernel(abelianization_matrix(p));
}

Presentation free_product(const Presentation& a, const Presentation& b) {
  Presentation out;
  out.generators = a.generators;
  out.generators.insert(out.generators.end(), b.generators.begin(), b.generators.end());
  out.relators = a.relators;
  const std::size_t shift = a.generators.size();
  for (const auto& r : b.relators) {
    Word w = r;
    for (auto& l : w) l.generator += shift;
    out.relators.push_back(std::move(w));
  }
  return out;
}

}  // namespace blowup
