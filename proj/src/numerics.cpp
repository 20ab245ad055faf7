#include "rgresum/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rgresum {

SymmetricMatrix::SymmetricMatrix(Eigen::Index dimension)
    : entries_(Eigen::MatrixXd::Zero(dimension, dimension)) {
  if (dimension <= 0) throw Error(ErrorKind::DomainError, "dimension must be positive");
}

SymmetricMatrix::SymmetricMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw Error(ErrorKind::DomainError, "symmetric matrix must be square and non-empty");
  }
  if (entries_ != entries_.transpose()) {
    throw Error(ErrorKind::DomainError, "matrix is not exactly symmetric");
  }
}

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Eigen::MatrixXd &a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

// One rotation annihilating a(p, q); rows and columns p, q are updated.
void rotate(Eigen::MatrixXd &a, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
    a(p, k) = a(k, p);
    a(q, k) = a(k, q);
  }
}

Eigen::VectorXd jacobi_diagonal(const SymmetricMatrix &m, double tol) {
  if (m.dimension() > kMaxEigenDimension) {
    throw Error(ErrorKind::DomainError, "eigensolver dimension limit exceeded");
  }
  if (!(tol > 0.0)) throw Error(ErrorKind::DomainError, "tol must be positive");
  Eigen::MatrixXd a = m.dense();
  const Eigen::Index n = a.rows();
  const double norm = a.norm();
  if (norm == 0.0) return Eigen::VectorXd::Zero(n);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= tol * norm) return a.diagonal();
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, p, q);
    }
  }
  if (off_diagonal_norm(a) <= tol * norm) return a.diagonal();
  throw Error(ErrorKind::ConvergenceFailure, "Jacobi sweeps did not converge");
}

}  // namespace

double symmetric_eigen_smallest(const SymmetricMatrix &m, double tol) {
  return jacobi_diagonal(m, tol).minCoeff();
}

Eigen::VectorXd symmetric_eigenvalues(const SymmetricMatrix &m, double tol) {
  Eigen::VectorXd d = jacobi_diagonal(m, tol);
  std::sort(d.data(), d.data() + d.size());
  return d;
}

}  // namespace rgresum
