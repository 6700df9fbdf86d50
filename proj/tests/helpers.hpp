#pragma once

#include <random>
#include <vector>

#include "doctest.h"
#include "sunjet/json_io.hpp"

namespace testing_helpers {

using namespace sunjet;

struct T {
  int comp;  // 0-based
  std::vector<int> exps;
  Rational c;
};

inline Poly poly(int nvars, const std::vector<std::pair<std::vector<int>, Rational>>& terms) {
  std::vector<Poly::Term> t;
  for (const auto& [e, c] : terms) t.emplace_back(Monomial(e), c);
  return Poly::from_terms(nvars, std::move(t));
}

inline VectorField field(int n, const std::vector<T>& terms) {
  int d = 2 * n + 1;
  std::vector<Poly> comps(d, Poly(d));
  for (const auto& t : terms) comps[t.comp] += Poly::term(Monomial(t.exps), t.c);
  return VectorField(n, comps);
}

inline Rational q(const char* s) { return Rational::parse(s); }

// Small random rational in {-2, ..., 2} / {1, 2, 3}.
inline Rational small_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 5) - 2;
  long den = static_cast<long>(rng() % 3) + 1;
  return Rational(num, den);
}

// Random field with levels in [lo, hi].
inline VectorField random_field(int n, int lo, int hi, std::mt19937_64& rng, int terms = 4) {
  auto basis = level_basis(n, lo, hi);
  VectorField out(n);
  for (int i = 0; i < terms; ++i) out += small_rational(rng) * basis[rng() % basis.size()];
  return out;
}

inline Poly random_poly(int nvars, int max_exp, std::mt19937_64& rng, int terms = 4) {
  std::vector<Poly::Term> t;
  for (int i = 0; i < terms; ++i) {
    std::vector<int> e(nvars);
    for (auto& x : e) x = static_cast<int>(rng() % (max_exp + 1));
    t.emplace_back(Monomial(e), small_rational(rng));
  }
  return Poly::from_terms(nvars, std::move(t));
}

// Identity plus a random perturbation with levels in [1, r].
inline Jet random_unipotent_jet(int n, int r, std::mt19937_64& rng) {
  VectorField x = random_field(n, 1, r, rng, 5);
  std::vector<Poly> comps;
  for (int i = 0; i < 2 * n + 1; ++i) comps.push_back(Poly::variable(2 * n + 1, i) + x[i]);
  return make_jet(n, r, comps);
}

inline CVec xi_of(int n, int j, bool imaginary) { return unit_vector(n, j, imaginary); }

}  // namespace testing_helpers
