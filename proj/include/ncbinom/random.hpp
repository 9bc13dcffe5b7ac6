#pragma once

// Seeded generators for randomized checks. All draws go through
// std::mt19937_64, so a seed reproduces the same instances.

#include <cmath>
#include <numbers>
#include <random>

#include "cmatrix.hpp"
#include "free_element.hpp"

namespace ncbinom {

using Rng = std::mt19937_64;

struct RandomElementShape {
  int max_terms = 4;
  int max_word_length = 3;
  int min_word_length = 0;
  int coef_range = 3; ///< integer numerators in [-range, range] \ {0}
  bool fractional = false; ///< also draw denominators in [1, range]
};

inline FreeElement random_element(const ContextPtr &ctx, Rng &rng,
                                  const RandomElementShape &shape = {}) {
  const auto gens = static_cast<std::uint32_t>(ctx->generators().size());
  std::uniform_int_distribution<int> term_count(0, shape.max_terms);
  std::uniform_int_distribution<int> length(shape.min_word_length,
                                            shape.max_word_length);
  std::uniform_int_distribution<std::uint32_t> letter(0, gens - 1);
  std::uniform_int_distribution<int> numerator(-shape.coef_range,
                                               shape.coef_range - 1);
  std::uniform_int_distribution<int> denominator(1, shape.coef_range);
  FreeElement x(ctx);
  for (int t = term_count(rng); t > 0; --t) {
    std::vector<std::uint32_t> letters(static_cast<std::size_t>(length(rng)));
    for (auto &l : letters)
      l = letter(rng);
    int num = numerator(rng);
    if (num >= 0)
      ++num; // skip zero
    int den = shape.fractional ? denominator(rng) : 1;
    x.add_term(Word(std::move(letters)), CoefPoly(Rational(num, den)));
  }
  return x;
}

/// Uniform draw from the closed unit disk.
inline Complex random_unit_disk(Rng &rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double r = std::sqrt(u(rng));
  double theta = 2.0 * std::numbers::pi * u(rng);
  return std::polar(r, theta);
}

inline CMatrix random_unit_disk_matrix(std::size_t dim, Rng &rng) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = random_unit_disk(rng);
  return m;
}

/// Random direction scaled to Frobenius norm exactly `norm` (up to rounding).
inline CMatrix random_matrix_with_norm(std::size_t dim, double norm, Rng &rng) {
  CMatrix m = random_unit_disk_matrix(dim, rng);
  return (norm / frob_norm(m)) * m;
}

/// n x n upper shift (single Jordan block with eigenvalue 0).
inline CMatrix shift_matrix(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i + 1 < dim; ++i)
    m(i, i + 1) = 1.0;
  return m;
}

} // namespace ncbinom
