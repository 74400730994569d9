// Copyright 2026 The geomq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded random samplers for property checks. Entries are standard normal.

#ifndef GEOMQ_RANDOM_HPP
#define GEOMQ_RANDOM_HPP

#include <cstdint>
#include <random>

#include "geomq/density.hpp"

namespace geomq {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double normal() { return normal_(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Index integer(Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng_); }

  CMatrix complex_matrix(Index rows, Index cols) {
    CMatrix m(rows, cols);
    for (Index i = 0; i < m.size(); ++i) m.data()[i] = Complex(normal(), normal());
    return m;
  }

  CVector complex_vector(Index n) { return complex_matrix(n, 1).col(0); }

  RVector real_vector(Index size) {
    RVector v(size);
    for (Index i = 0; i < size; ++i) v(i) = normal();
    return v;
  }

  /// Uniform on the unit sphere of ℝ²ⁿ.
  RealifiedVector unit_vector(Index n) { return real_vector(2 * n).normalized(); }

  HermitianOperator hermitian(Index n) {
    const CMatrix m = complex_matrix(n, n);
    return HermitianOperator::symmetrized(m);
  }

  /// Haar-ish unitary from the QR factor of a Gaussian matrix.
  CMatrix unitary(Index n) {
    Eigen::HouseholderQR<CMatrix> qr(complex_matrix(n, n));
    return qr.householderQ() * CMatrix::Identity(n, n);
  }

  /// U diag(s) V with singular values s uniform in [lo, hi]; condition number ≤ hi/lo.
  CMatrix well_conditioned(Index n, double lo = 0.5, double hi = 2.0) {
    RVector s(n);
    for (Index i = 0; i < n; ++i) s(i) = uniform(lo, hi);
    return unitary(n) * s.cast<Complex>().asDiagonal() * unitary(n);
  }

  /// Density matrix of the given rank with eigenvalues bounded away from zero.
  DensityMatrix state(Index n, Index rank) {
    RVector w = RVector::Zero(n);
    for (Index i = 0; i < rank; ++i) w(i) = uniform(0.2, 1.0);
    w /= w.sum();
    const CMatrix u = unitary(n);
    return DensityMatrix(PositiveOperator(HermitianOperator::symmetrized(u * w.cast<Complex>().asDiagonal() * u.adjoint())));
  }

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
};

}  // namespace geomq

#endif  // GEOMQ_RANDOM_HPP
