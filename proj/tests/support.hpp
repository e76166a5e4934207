#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "cubicsym/cyclo.hpp"
#include "cubicsym/forms.hpp"
#include "cubicsym/io.hpp"
#include "cubicsym/matrix.hpp"

namespace testsupport {

using namespace cubicsym;

inline std::string corpusPath(const std::string& rel) {
  return (std::filesystem::path(CUBICSYM_TEST_CORPUS_DIR) / rel).string();
}

inline std::string manifestPath(const std::string& rel) {
  return (std::filesystem::path(CUBICSYM_TEST_MANIFEST_DIR) / rel).string();
}

inline Exps ex(std::initializer_list<int> e) {
  Exps out{};
  int i = 0;
  for (int v : e) out[i++] = static_cast<uint8_t>(v);
  return out;
}

// Random element with small integer coordinates in the power basis.
inline CycNum randomCyc(std::mt19937& rng, unsigned n, int range = 3) {
  std::uniform_int_distribution<int> coef(-range, range);
  std::map<long long, mpq_class> raw;
  unsigned phi = eulerPhi(n);
  for (unsigned e = 0; e < phi; ++e) raw[e] = coef(rng);
  std::uniform_int_distribution<int> den(1, 3);
  CycNum v = CycNum::reduce(raw, n);
  return v * CycNum::rational(1, den(rng), n);
}

inline CycNum randomNonzeroCyc(std::mt19937& rng, unsigned n, int range = 3) {
  for (;;) {
    CycNum v = randomCyc(rng, n, range);
    if (!v.isZero()) return v;
  }
}

// Sparse random matrix, resampled until invertible.
inline CycMatrix randomInvertible(std::mt19937& rng, int m, unsigned n) {
  std::uniform_int_distribution<int> pick(0, 2);
  for (;;) {
    CycMatrix a(m, m, n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i == j || pick(rng) == 0) a(i, j) = randomCyc(rng, n, 1);
      }
    }
    if (!a.det().isZero()) return a;
  }
}

inline Form randomForm(std::mt19937& rng, int m, int d, unsigned n, double density = 0.5) {
  std::bernoulli_distribution keep(density);
  std::vector<Term> terms;
  for (const auto& e : monomials(m, d)) {
    if (keep(rng)) terms.emplace_back(e, randomCyc(rng, n, 2));
  }
  if (terms.empty()) terms.emplace_back(monomials(m, d).front(), CycNum::one(n));
  return Form::fromTerms(m, d, n, std::move(terms));
}

inline CycMatrix diagZeta(const std::vector<std::pair<unsigned, long long>>& entries, unsigned n) {
  std::vector<CycNum> d;
  for (auto [k, e] : entries) d.push_back(embed(CycNum::zeta(k, e), n));
  return CycMatrix::diagonal(d);
}

}  // namespace testsupport
