#pragma once

#include <random>
#include <string>

#include "brisk/analysis.hpp"
#include "brisk/display.hpp"
#include "brisk/report.hpp"
#include "brisk/presentation.hpp"

namespace brisk::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(BRISK_FIXTURE_DIR) + "/" + name;
}

inline AlgebraPtr<PrimeField> fixture(const std::string& name, long long p = 101) {
  return share(build_algebra(load_presentation(fixture_path(name)), PrimeField(p)));
}

inline AlgebraPtr<RationalField> fixture_q(const std::string& name) {
  return share(build_algebra(load_presentation(fixture_path(name)), RationalField()));
}

inline Vec<PrimeField> vec(const PrimeField& f, std::initializer_list<long long> xs) {
  Vec<PrimeField> v;
  for (auto x : xs) v.push_back(f.from_int(x));
  return v;
}

inline Mat<PrimeField> mat(const PrimeField& f, std::size_t r, std::size_t c,
                           std::initializer_list<long long> xs) {
  Mat<PrimeField> m(f, r, c);
  std::size_t k = 0;
  for (auto x : xs) {
    m(k / c, k % c) = f.from_int(x);
    ++k;
  }
  return m;
}

inline Mat<PrimeField> random_mat(const PrimeField& f, std::size_t r, std::size_t c,
                                  std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(0, f.modulus() - 1);
  Mat<PrimeField> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(d(rng));
  return m;
}

/// Hom(M, N) of Kronecker modules computed from scratch as a null space.
inline std::size_t kron_hom_dim(const KronModule<PrimeField>& m, const KronModule<PrimeField>& n) {
  const auto& f = m.field;
  const std::size_t u0 = n.dim0 * m.dim0, u1 = n.dim1 * m.dim1;
  // Unknowns: f0 (n0 x m0) then f1 (n1 x m1), row-major.
  Mat<PrimeField> sys(f, 3 * n.dim1 * m.dim0, u0 + u1);
  std::size_t row = 0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t i = 0; i < n.dim1; ++i)
      for (std::size_t j = 0; j < m.dim0; ++j, ++row) {
        // (N_a f0 - f1 M_a)(i, j) = 0
        for (std::size_t k = 0; k < n.dim0; ++k)
          sys(row, k * m.dim0 + j) = f.add(sys(row, k * m.dim0 + j), n.act[a](i, k));
        for (std::size_t k = 0; k < m.dim1; ++k)
          sys(row, u0 + i * m.dim1 + k) = f.sub(sys(row, u0 + i * m.dim1 + k), m.act[a](k, j));
      }
  return u0 + u1 - rank(sys);
}

}  // namespace brisk::testing
