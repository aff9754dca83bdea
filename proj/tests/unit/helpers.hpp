#pragma once

#include "nilgeom/kform.hpp"
#include "nilgeom/lie_algebra.hpp"

#include <random>

namespace testing_support {

using nilgeom::KFormQ;
using nilgeom::MatrixQ;
using nilgeom::Rational;
using nilgeom::VectorQ;

inline Rational draw(std::mt19937_64& rng, bool allow_zero = true)
{
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  int p = num(rng);
  while (!allow_zero && p == 0)
    p = num(rng);
  return Rational(p, den(rng));
}

inline VectorQ random_vector(int n, std::mt19937_64& rng)
{
  VectorQ v(n);
  for (int i = 0; i < n; ++i)
    v(i) = draw(rng);
  return v;
}

inline MatrixQ random_matrix(int n, std::mt19937_64& rng)
{
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = draw(rng);
  return m;
}

/// Random k-form with every coefficient drawn independently.
inline KFormQ random_form(int n, int k, std::mt19937_64& rng)
{
  KFormQ f(n, k);
  std::vector<int> idx(k);
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == k) {
      f.add_term(idx, draw(rng));
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return f;
}

inline MatrixQ diag(std::initializer_list<int> d)
{
  MatrixQ m = MatrixQ::Zero(static_cast<int>(d.size()), static_cast<int>(d.size()));
  int i = 0;
  for (int v : d) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

}  // namespace testing_support
