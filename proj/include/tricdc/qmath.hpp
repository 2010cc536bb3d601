// Copyright 2026 The tricdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense complex linear algebra for one to three qubits.
//
// Everything here is templated on the real scalar type so the same code runs
// in double for the public API and in long double where a caller needs extra
// headroom (the Wootters spin-flip route takes square roots of eigenvalues
// that are zero in exact arithmetic). Matrices are Eigen dynamic-size with a
// fixed upper bound of 8, so nothing here touches the heap.
//
// Qubit ordering: qubit 0 is the most significant bit of a basis index, so
// the amplitude of |abc> lives at 4*a + 2*b + c.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "tricdc/errors.hpp"

namespace tricdc {

inline constexpr int kMaxDim = 8;

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic,
                             Eigen::ColMajor, kMaxDim, kMaxDim>;

template <typename Scalar>
using Vector =
    Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;

template <typename Scalar>
using RealVector =
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;

using Matrixd = Matrix<double>;
using Vectord = Vector<double>;
using Complexd = Complex<double>;

/// Fixed-size kets used throughout the domain layer.
using Ket2 = Eigen::Matrix<Complexd, 2, 1>;
using Ket4 = Eigen::Matrix<Complexd, 4, 1>;
using Ket8 = Eigen::Matrix<Complexd, 8, 1>;

namespace tol {
/// Entrywise Hermiticity tolerance for density matrices.
inline constexpr double kHermitian = 1e-12;
/// Entrywise Hermiticity tolerance accepted by the eigensolver.
inline constexpr double kEigHermitian = 1e-10;
/// |trace - 1| allowed for a density matrix.
inline constexpr double kTrace = 1e-10;
/// Most negative eigenvalue a density matrix may carry.
inline constexpr double kDensityNegative = 1e-10;
/// Eigenvalues in (-kNegativeClamp, 0) are treated as exact zeros; anything
/// below is a contract violation.
inline constexpr double kNegativeClamp = 1e-8;
/// Default relative rank threshold.
inline constexpr double kRank = 1e-9;
}  // namespace tol

inline bool is_supported_dim(Eigen::Index dim) {
  return dim == 2 || dim == 4 || dim == 8;
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols() || !is_supported_dim(m.rows())) {
    throw InvalidDimension(std::string(what) + ": expected a square matrix of dimension 2, 4 or 8, got " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

template <typename Derived>
typename Derived::RealScalar hermitian_defect(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// Kronecker product

template <typename A, typename B>
Matrix<typename A::RealScalar> kron(const Eigen::MatrixBase<A>& a,
                                    const Eigen::MatrixBase<B>& b) {
  static_assert(std::is_same_v<typename A::Scalar, typename B::Scalar>);
  require_square(a, "kron");
  require_square(b, "kron");
  const Eigen::Index n = a.rows() * b.rows();
  if (n > kMaxDim) {
    throw InvalidDimension("kron: product dimension " + std::to_string(n) + " exceeds 8");
  }
  Matrix<typename A::RealScalar> out(n, n);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Kronecker product of two kets.
template <typename A, typename B>
Vector<typename A::RealScalar> kron_ket(const Eigen::MatrixBase<A>& a,
                                        const Eigen::MatrixBase<B>& b) {
  const Eigen::Index n = a.size() * b.size();
  if (n > kMaxDim) {
    throw InvalidDimension("kron_ket: product dimension " + std::to_string(n) + " exceeds 8");
  }
  Vector<typename A::RealScalar> out(n);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition (cyclic Jacobi)

template <typename Scalar>
struct HermitianEigen {
  RealVector<Scalar> values;  // descending
  Matrix<Scalar> vectors;     // orthonormal columns, vectors.col(i) <-> values(i)
};

namespace detail {

template <typename Scalar>
Scalar off_diagonal_norm(const Matrix<Scalar>& a) {
  Scalar sum = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// 1e-13 in double, scaled down with machine epsilon for wider types.
template <typename Scalar>
Scalar jacobi_threshold() {
  constexpr long double ratio =
      static_cast<long double>(std::numeric_limits<Scalar>::epsilon()) /
      static_cast<long double>(std::numeric_limits<double>::epsilon());
  return static_cast<Scalar>(1e-13L * ratio);
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Each rotation first removes the phase of the pivot element and
/// then applies the classical real rotation, so every step is unitary.
/// Throws ContractViolation if `m` is not Hermitian within 1e-10.
template <typename Derived>
HermitianEigen<typename Derived::RealScalar> eig_hermitian(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::RealScalar;
  using C = Complex<Scalar>;
  require_square(m, "eig_hermitian");
  if (hermitian_defect(m) > Scalar(tol::kEigHermitian)) {
    throw ContractViolation("eig_hermitian: matrix is not Hermitian");
  }

  const Eigen::Index n = m.rows();
  Matrix<Scalar> a = (m + m.adjoint()) / Scalar(2);
  Matrix<Scalar> v = Matrix<Scalar>::Identity(n, n);

  const Scalar threshold =
      detail::jacobi_threshold<Scalar>() * std::max(Scalar(1), Scalar(a.norm()));
  constexpr int kMaxSweeps = 64;
  int sweep = 0;
  for (; sweep < kMaxSweeps && detail::off_diagonal_norm(a) >= threshold; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar r = std::abs(a(p, q));
        if (r == Scalar(0)) continue;
        const C phase = a(p, q) / r;  // e^{i phi}
        const C phase_conj = std::conj(phase);
        const Scalar app = a(p, p).real();
        const Scalar aqq = a(q, q).real();

        const Scalar theta = (aqq - app) / (Scalar(2) * r);
        const Scalar t = (theta >= 0 ? Scalar(1) : Scalar(-1)) /
                         (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
        const Scalar s = t * c;

        // G restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
        const C g_qp = -s * phase_conj;
        const C g_qq = c * phase_conj;
        for (Eigen::Index k = 0; k < n; ++k) {
          const C akp = a(k, p);
          const C akq = a(k, q);
          a(k, p) = akp * c + akq * g_qp;
          a(k, q) = akp * s + akq * g_qq;
          const C vkp = v(k, p);
          const C vkq = v(k, q);
          v(k, p) = vkp * c + vkq * g_qp;
          v(k, q) = vkp * s + vkq * g_qq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const C apk = a(p, k);
          const C aqk = a(q, k);
          a(p, k) = c * apk + std::conj(g_qp) * aqk;
          a(q, k) = s * apk + std::conj(g_qq) * aqk;
        }
        a(p, q) = C(0);
        a(q, p) = C(0);
        a(p, p) = C(a(p, p).real(), 0);
        a(q, q) = C(a(q, q).real(), 0);
      }
    }
  }
  if (sweep == kMaxSweeps && detail::off_diagonal_norm(a) >= threshold) {
    throw NumericConsistencyError("eig_hermitian: Jacobi iteration did not converge");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return a(x, x).real() > a(y, y).real();
  });

  HermitianEigen<Scalar> out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]).real();
    out.vectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
  }
  return out;
}

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// (-1e-8, 0) are clamped to zero; anything more negative is rejected.
template <typename Derived>
Matrix<typename Derived::RealScalar> sqrt_psd(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::RealScalar;
  const auto eig = eig_hermitian(m);
  // Round-off level eigenvalues are zeros; their square roots would not be.
  const Scalar floor =
      Scalar(64) * std::numeric_limits<Scalar>::epsilon() * eig.values.cwiseAbs().maxCoeff();
  RealVector<Scalar> roots(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const Scalar lambda = eig.values(i);
    if (lambda < -Scalar(tol::kNegativeClamp)) {
      throw ContractViolation("sqrt_psd: matrix has a negative eigenvalue " +
                              std::to_string(static_cast<double>(lambda)));
    }
    roots(i) = lambda > floor ? std::sqrt(lambda) : Scalar(0);
  }
  return eig.vectors * roots.template cast<Complex<Scalar>>().asDiagonal() *
         eig.vectors.adjoint();
}

// ---------------------------------------------------------------------------
// Density matrices

/// A validated one- or two-qubit density matrix: Hermitian within 1e-12,
/// unit trace within 1e-10, spectrum bounded below by -1e-10.
template <typename Scalar>
class DensityMatrix {
 public:
  template <typename Derived>
  static DensityMatrix from(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 4)) {
      throw InvalidDimension("DensityMatrix: dimension must be 2 or 4, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    if (hermitian_defect(m) > Scalar(tol::kHermitian)) {
      throw ContractViolation("DensityMatrix: not Hermitian");
    }
    if (std::abs(m.trace() - Complex<Scalar>(1)) > Scalar(tol::kTrace)) {
      throw ContractViolation("DensityMatrix: trace is not 1");
    }
    DensityMatrix out(m);
    if (out.eigen().values.minCoeff() < -Scalar(tol::kDensityNegative)) {
      throw ContractViolation("DensityMatrix: not positive semidefinite");
    }
    return out;
  }

  /// Projector |psi><psi| for a normalized one- or two-qubit ket.
  template <typename Derived>
  static DensityMatrix pure(const Eigen::MatrixBase<Derived>& ket) {
    return from(ket * ket.adjoint());
  }

  const Matrix<Scalar>& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  const HermitianEigen<Scalar>& eigen() const { return eigen_; }

  template <typename Other>
  DensityMatrix<Other> cast() const {
    return DensityMatrix<Other>::from(m_.template cast<Complex<Other>>());
  }

 private:
  template <typename Derived>
  explicit DensityMatrix(const Eigen::MatrixBase<Derived>& m)
      : m_((m + m.adjoint()) / Scalar(2)), eigen_(eig_hermitian(m_)) {}

  Matrix<Scalar> m_;
  HermitianEigen<Scalar> eigen_;
};

using DensityMatrixd = DensityMatrix<double>;

/// Reduced density matrix over the subsystems listed in `keep` (ascending,
/// non-empty, proper subset). Subsystem 0 is the most significant factor.
template <typename Derived>
DensityMatrix<typename Derived::RealScalar> partial_trace(
    const Eigen::MatrixBase<Derived>& rho, const std::vector<int>& dims,
    const std::vector<int>& keep) {
  using Scalar = typename Derived::RealScalar;
  const int nsys = static_cast<int>(dims.size());
  if (rho.rows() != rho.cols()) throw InvalidDimension("partial_trace: matrix is not square");
  long total = 1;
  for (int d : dims) {
    if (d < 1) throw InvalidDimension("partial_trace: subsystem dimension must be positive");
    total *= d;
  }
  if (total != rho.rows()) {
    throw InvalidDimension("partial_trace: subsystem dimensions multiply to " +
                           std::to_string(total) + ", matrix has dimension " +
                           std::to_string(rho.rows()));
  }
  if (keep.empty() || static_cast<int>(keep.size()) >= nsys) {
    throw InvalidDimension("partial_trace: keep must be a non-empty proper subset");
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= nsys || (i > 0 && keep[i] <= keep[i - 1])) {
      throw InvalidDimension("partial_trace: keep indices must be ascending and in range");
    }
  }

  std::vector<int> traced;
  for (int s = 0; s < nsys; ++s) {
    if (!std::binary_search(keep.begin(), keep.end(), s)) traced.push_back(s);
  }
  // stride of subsystem s in the full index
  std::vector<long> stride(static_cast<std::size_t>(nsys), 1);
  for (int s = nsys - 2; s >= 0; --s) {
    stride[static_cast<std::size_t>(s)] =
        stride[static_cast<std::size_t>(s) + 1] * dims[static_cast<std::size_t>(s) + 1];
  }
  auto offsets = [&](const std::vector<int>& systems) {
    std::vector<long> out{0};
    for (int s : systems) {
      std::vector<long> next;
      for (long base : out) {
        for (int k = 0; k < dims[static_cast<std::size_t>(s)]; ++k) {
          next.push_back(base + k * stride[static_cast<std::size_t>(s)]);
        }
      }
      out = std::move(next);
    }
    return out;
  };
  const auto kept = offsets(keep);
  const auto summed = offsets(traced);

  const auto n = static_cast<Eigen::Index>(kept.size());
  Matrix<Scalar> out = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Complex<Scalar> acc(0);
      for (long t : summed) {
        acc += rho(kept[static_cast<std::size_t>(i)] + t, kept[static_cast<std::size_t>(j)] + t);
      }
      out(i, j) = acc;
    }
  }
  return DensityMatrix<Scalar>::from(out);
}

/// Number of eigenvalues strictly above tol times the largest eigenvalue.
template <typename Scalar>
int rank_with_tol(const DensityMatrix<Scalar>& rho, Scalar tolerance = Scalar(tol::kRank)) {
  if (!(tolerance > Scalar(0))) throw ContractViolation("rank_with_tol: tolerance must be positive");
  const auto& values = rho.eigen().values;
  const Scalar cutoff = tolerance * values(0);
  return static_cast<int>((values.array() > cutoff).count());
}

// ---------------------------------------------------------------------------
// Pauli operators and overlaps

enum class Pauli { I, X, Y, Z };

/// Single-qubit Pauli operator in the real convention used by the correction
/// maps: Y = [[0, -1], [1, 0]], i.e. the Hermitian sigma_y times -i.
template <typename Scalar = double>
Matrix<Scalar> pauli(Pauli p) {
  Matrix<Scalar> m(2, 2);
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -1, 1, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

/// The Hermitian sigma_y = [[0, -i], [i, 0]] used by the spin-flip.
template <typename Scalar = double>
Matrix<Scalar> hermitian_pauli_y() {
  using C = Complex<Scalar>;
  Matrix<Scalar> m(2, 2);
  m << C(0), C(0, -1), C(0, 1), C(0);
  return m;
}

/// |<a|b>|^2
template <typename A, typename B>
typename A::RealScalar fidelity(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.size() != b.size()) throw InvalidDimension("fidelity: ket sizes differ");
  return std::norm(a.dot(b));
}

}  // namespace tricdc
