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

#include "geomq/kahler.hpp"

#include <cmath>
#include <deque>

namespace geomq {

namespace {

const Complex kI{0.0, 1.0};

// 2×2 block pattern repeated along the diagonal.
RMatrix block_diagonal(Index n, double a, double b, double c, double d) {
  RMatrix m = RMatrix::Zero(2 * n, 2 * n);
  for (Index k = 0; k < n; ++k) {
    m(2 * k, 2 * k) = a;
    m(2 * k, 2 * k + 1) = b;
    m(2 * k + 1, 2 * k) = c;
    m(2 * k + 1, 2 * k + 1) = d;
  }
  return m;
}

void require_even(const RVector& psi, const char* what) {
  if (psi.size() == 0 || psi.size() % 2 != 0) throw Error(ErrorCode::dimension_mismatch, what);
}

}  // namespace

RealifiedVector realify(const CVector& z) {
  RealifiedVector psi(2 * z.size());
  for (Index k = 0; k < z.size(); ++k) {
    psi(2 * k) = z(k).real();
    psi(2 * k + 1) = z(k).imag();
  }
  return psi;
}

CVector complexify(const RealifiedVector& psi) {
  require_even(psi, "complexify: realified vector must have even, nonzero length");
  const Index n = psi.size() / 2;
  CVector z(n);
  for (Index k = 0; k < n; ++k) z(k) = Complex(psi(2 * k), psi(2 * k + 1));
  return z;
}

RMatrix realify_operator(const CMatrix& a) {
  const Index n = a.rows();
  RMatrix m(2 * n, 2 * a.cols());
  for (Index j = 0; j < n; ++j) {
    for (Index k = 0; k < a.cols(); ++k) {
      const Complex v = a(j, k);
      m(2 * j, 2 * k) = v.real();
      m(2 * j, 2 * k + 1) = -v.imag();
      m(2 * j + 1, 2 * k) = v.imag();
      m(2 * j + 1, 2 * k + 1) = v.real();
    }
  }
  return m;
}

CMatrix complexify_operator(const RMatrix& m) {
  detail::require(m.rows() == m.cols() && m.rows() % 2 == 0 && m.rows() > 0, ErrorCode::dimension_mismatch,
                  "complexify_operator: need a square matrix of even size");
  const Index n = m.rows() / 2;
  const RMatrix j = KahlerTensors::standard(n).J;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  detail::require((m * j - j * m).cwiseAbs().maxCoeff() <= 1e-9 * scale, ErrorCode::invalid_argument,
                  "complexify_operator: matrix does not commute with J");
  CMatrix a(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) a(r, c) = Complex(m(2 * r, 2 * c), m(2 * r + 1, 2 * c));
  return a;
}

KahlerTensors KahlerTensors::standard(Index n) {
  detail::require(n >= 1, ErrorCode::invalid_argument, "KahlerTensors: n must be >= 1");
  KahlerTensors t;
  t.n = n;
  t.g = RMatrix::Identity(2 * n, 2 * n);
  // ω = Σ dqᵏ ∧ dpₖ
  t.omega = block_diagonal(n, 0.0, 1.0, -1.0, 0.0);
  // J(∂_q) = ∂_p, J(∂_p) = −∂_q
  t.J = block_diagonal(n, 0.0, -1.0, 1.0, 0.0);
  t.G = RMatrix::Identity(2 * n, 2 * n);
  // Ω = Σ ∂_q ∧ ∂_p
  t.Omega = block_diagonal(n, 0.0, 1.0, -1.0, 0.0);
  return t;
}

std::string_view to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::hamiltonian: return "hamiltonian";
    case FieldKind::gradient: return "gradient";
    case FieldKind::dilation: return "dilation";
    case FieldKind::phase: return "phase";
    case FieldKind::other: return "other";
  }
  return "other";
}

double quadratic_function(const HermitianOperator& a, const RealifiedVector& psi) {
  return quadratic_function_complex(a.matrix(), psi).real();
}

Complex quadratic_function_complex(const CMatrix& a, const RealifiedVector& psi) {
  const CVector z = complexify(psi);
  detail::require_same_dim(a.rows(), z.size(), "quadratic_function: dimension mismatch");
  return 0.5 * z.dot(a * z);
}

RVector quadratic_differential(const HermitianOperator& a, const RealifiedVector& psi) {
  require_even(psi, "quadratic_differential: bad vector");
  detail::require_same_dim(2 * a.dim(), psi.size(), "quadratic_differential: dimension mismatch");
  // f_A = ½ ψᵀ R(A) ψ with R(A) symmetric for Hermitian A.
  return realify_operator(a.matrix()) * psi;
}

double poisson_bracket(const HermitianOperator& a, const HermitianOperator& b, const RealifiedVector& psi) {
  detail::require_same_dim(a.dim(), b.dim(), "poisson_bracket: dimension mismatch");
  const auto t = KahlerTensors::standard(a.dim());
  return quadratic_differential(a, psi).dot(t.Omega * quadratic_differential(b, psi));
}

HermitianOperator poisson_bracket_operator(const HermitianOperator& a, const HermitianOperator& b) {
  return lie_bracket(a, b);
}

double jordan_bracket_fn(const HermitianOperator& a, const HermitianOperator& b, const RealifiedVector& psi) {
  detail::require_same_dim(a.dim(), b.dim(), "jordan_bracket_fn: dimension mismatch");
  const auto t = KahlerTensors::standard(a.dim());
  return quadratic_differential(a, psi).dot(t.G * quadratic_differential(b, psi));
}

Complex star_product_fn(const HermitianOperator& a, const HermitianOperator& b, const RealifiedVector& psi) {
  return Complex(0.5 * jordan_bracket_fn(a, b, psi), 0.5 * poisson_bracket(a, b, psi));
}

LinearVectorField hamiltonian_field(const HermitianOperator& a) {
  const auto t = KahlerTensors::standard(a.dim());
  // Xʲ = Ω(df, dxʲ) = (Ωᵀ df)ʲ and df = R(A)ψ.
  return {t.Omega.transpose() * realify_operator(a.matrix()), FieldKind::hamiltonian};
}

LinearVectorField schrodinger_field(const HermitianOperator& a) {
  LinearVectorField x = hamiltonian_field(a);
  x.matrix = -x.matrix;
  return x;
}

LinearVectorField gradient_field(const HermitianOperator& a) {
  const auto t = KahlerTensors::standard(a.dim());
  return {t.G.transpose() * realify_operator(a.matrix()), FieldKind::gradient};
}

LinearVectorField dilation_field(Index n) {
  detail::require(n >= 1, ErrorCode::invalid_argument, "dilation_field: n must be >= 1");
  return {RMatrix::Identity(2 * n, 2 * n), FieldKind::dilation};
}

LinearVectorField phase_field(Index n) {
  const auto t = KahlerTensors::standard(n);
  return {t.J * dilation_field(n).matrix, FieldKind::phase};
}

LinearVectorField field_bracket(const LinearVectorField& x, const LinearVectorField& y) {
  detail::require_same_dim(x.matrix.rows(), y.matrix.rows(), "field_bracket: dimension mismatch");
  return {y.matrix * x.matrix - x.matrix * y.matrix, FieldKind::other};
}

HamiltonianProjection project_to_hamiltonian(const LinearVectorField& field) {
  const Index n = field.n();
  const auto t = KahlerTensors::standard(n);
  // X_C = J R(C), so R(C) = −J M; keep the complex-linear part, then the Hermitian part.
  const RMatrix s = -t.J * field.matrix;
  const RMatrix linear_part = 0.5 * (s - t.J * s * t.J);
  const CMatrix c = complexify_operator(linear_part);
  HermitianOperator generator = HermitianOperator::symmetrized(c);
  const double residual = (field.matrix - hamiltonian_field(generator).matrix).cwiseAbs().maxCoeff();
  return {std::move(generator), residual};
}

LieClosure lie_closure(const std::vector<LinearVectorField>& fields, double rank_tol) {
  detail::require(!fields.empty(), ErrorCode::invalid_argument, "lie_closure: need at least one field");
  const Index size = fields.front().matrix.rows();
  for (const auto& f : fields)
    detail::require_same_dim(f.matrix.rows(), size, "lie_closure: fields must share n");

  LieClosure out;
  // Returns true when m adds a new direction to the basis.
  auto try_add = [&](const RMatrix& m) {
    const double scale = m.norm();
    if (scale == 0.0) return false;
    RMatrix r = m;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : out.basis) r -= (r.cwiseProduct(b).sum()) * b;
    const double rn = r.norm();
    if (rn <= rank_tol * scale) return false;
    out.basis.push_back(r / rn);
    return true;
  };

  std::deque<RMatrix> pending;
  for (const auto& f : fields)
    if (try_add(f.matrix)) pending.push_back(out.basis.back());

  while (!pending.empty()) {
    const RMatrix x = pending.front();
    pending.pop_front();
    const std::size_t count = out.basis.size();
    for (std::size_t i = 0; i < count; ++i) {
      const RMatrix& b = out.basis[i];
      if (try_add(x * b - b * x)) pending.push_back(out.basis.back());
    }
  }
  out.dimension = static_cast<Index>(out.basis.size());
  return out;
}

}  // namespace geomq
