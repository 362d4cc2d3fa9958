#pragma once

// Witness runner for the substitution endomorphism on multivariate
// polynomials with the Gauss norm: the exact telescoping identity, norm
// preservation under the substitution, and the distance-from-image
// certificate, each recorded as a report check.

#include <nonarch/exact.hpp>
#include <nonarch/report.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace nonarch {

struct GaussConfig {
  // Telescoping identity is checked for n = 1 .. identity_levels.
  std::uint32_t identity_levels = 8;

  // Coefficient field of the series that the polynomial coefficients live
  // in: GF(prime^ext_degree), or the rationals when rational_ground is set.
  bool rational_ground = false;
  std::uint32_t prime = 3;
  std::uint32_t ext_degree = 1;

  // Randomized norm-preservation trials.
  std::size_t norm_trials = 200;
  std::uint32_t norm_max_level = 6;

  // Randomized distance-from-image trials (per level 1 .. gap_max_level).
  std::size_t gap_trials = 50;
  std::uint32_t gap_max_level = 6;

  std::uint64_t seed = 1;

  // Scaling exponents e_i for x_i = t^{e_i}.  Empty means the dyadic
  // default e_i = 2^{-i} with declared bound 1.
  std::vector<BigRat> exponents;
  std::optional<BigRat> declared_bound;
};

Report run_gauss(const GaussConfig& config);

}  // namespace nonarch
