#pragma once

#include "binres/chart.hpp"

namespace binres {

/// Deterministic pseudo-random binomial ideals for the verification corpus:
/// up to 4 variables, exponents up to 4, characteristic in {0, 2, 3, 5}.
struct CorpusOptions {
  int min_vars = 2;
  int max_vars = 4;
  int max_exp = 4;
  int max_gens = 3;
  std::vector<long long> characteristics = {0, 2, 3, 5};
};

Chart corpus_ideal(std::uint64_t seed, std::uint64_t index, const CorpusOptions& opt = {});

/// Random simpideal instance (exceptional monomials times hyperbolic
/// factors) plus a stratum, for exercising the local monomial form.
struct SimpidealInstance {
  Chart chart;
  Stratum stratum;
  int r = 0;  // number of hyperbolic generators
};
SimpidealInstance corpus_simpideal(std::uint64_t seed, std::uint64_t index);

/// Class-preserving variable permutation of a root chart (vanishable
/// variables permute among themselves, invertible likewise).
Chart permute_chart(const Chart& chart, const std::vector<int>& perm);

/// Random class-preserving permutation.
std::vector<int> corpus_permutation(const Chart& chart, std::uint64_t seed, std::uint64_t index);

}  // namespace binres
