#include "mubcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mubcorr {

namespace {

void check_shape(const ComplexMatrix& mat, int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1) {
    throw DomainError("subsystem dimensions must be positive");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (mat.rows() != n || mat.cols() != n) {
    std::ostringstream msg;
    msg << "matrix is " << mat.rows() << "x" << mat.cols() << " but dim_a*dim_b = " << n;
    throw DomainError(msg.str());
  }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat, int dim_a, int dim_b)
    : DensityMatrix(std::move(mat), dim_a, dim_b, true) {}

DensityMatrix DensityMatrix::trusted(ComplexMatrix mat, int dim_a, int dim_b) {
  return DensityMatrix(std::move(mat), dim_a, dim_b, false);
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, int dim_a, int dim_b, bool check_psd)
    : mat_(std::move(mat)), dim_a_(dim_a), dim_b_(dim_b) {
  check_shape(mat_, dim_a_, dim_b_);
  for (Eigen::Index i = 0; i < mat_.rows(); ++i) {
    for (Eigen::Index j = i; j < mat_.cols(); ++j) {
      if (std::abs(mat_(i, j) - std::conj(mat_(j, i))) > kHermitianTol) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian at entry (" << i << ", " << j << ")";
        throw InvalidStateError(msg.str());
      }
    }
  }
  const Complex tr = mat_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) {
    std::ostringstream msg;
    msg.precision(15);
    msg << "trace is " << tr.real() << ", expected 1";
    throw InvalidStateError(msg.str());
  }
  if (check_psd) {
    const auto ev = eigvals_hermitian(mat_);
    if (ev.front() < -kNegativeEigenTol) {
      std::ostringstream msg;
      msg << "matrix is not positive semidefinite (eigenvalue " << ev.front() << ")";
      throw InvalidStateError(msg.str());
    }
  }
}

ComplexMatrix DensityMatrix::block(int a, int a_prime) const {
  return mat_.block(static_cast<Eigen::Index>(a) * dim_b_, static_cast<Eigen::Index>(a_prime) * dim_b_,
                    dim_b_, dim_b_);
}

ComplexMatrix identity(int d) { return ComplexMatrix::Identity(d, d); }

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix swap_operator(int d) {
  ComplexMatrix p = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      p(i * d + j, j * d + i) = 1.0;
    }
  }
  return p;
}

ComplexVector max_entangled_vector(int d) {
  ComplexVector v = ComplexVector::Zero(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) v(i * d + i) = amp;
  return v;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& mat, int dim_a, int dim_b, Subsystem traced) {
  check_shape(mat, dim_a, dim_b);
  if (traced == Subsystem::B) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (int a = 0; a < dim_a; ++a) {
      for (int ap = 0; ap < dim_a; ++ap) {
        Complex s = 0.0;
        for (int b = 0; b < dim_b; ++b) s += mat(a * dim_b + b, ap * dim_b + b);
        out(a, ap) = s;
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (int a = 0; a < dim_a; ++a) {
    out += mat.block(static_cast<Eigen::Index>(a) * dim_b, static_cast<Eigen::Index>(a) * dim_b, dim_b, dim_b);
  }
  return out;
}

ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem traced) {
  return partial_trace(rho.matrix(), rho.dim_a(), rho.dim_b(), traced);
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  return u.rows() == u.cols() && max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())) <= tol;
}

std::vector<double> eigvals_hermitian(const ComplexMatrix& a) {
  if (!is_hermitian(a, 1e-10)) {
    throw DomainError("eigvals_hermitian: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

HermitianEigen eigh(const ComplexMatrix& a) {
  if (!is_hermitian(a, 1e-10)) {
    throw DomainError("eigh: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {{ev.data(), ev.data() + ev.size()}, solver.eigenvectors()};
}

ComplexMatrix expm_i_hermitian(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  const ComplexMatrix& v = solver.eigenvectors();
  ComplexVector phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    phases(k) = std::polar(1.0, solver.eigenvalues()(k));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

double xlog2x(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }

double entropy_of_spectrum(const std::vector<double>& spectrum) {
  double s = 0.0;
  for (double lambda : spectrum) {
    if (lambda < -kNegativeEigenTol) {
      std::ostringstream msg;
      msg << "negative eigenvalue " << lambda << " in entropy evaluation";
      throw InvalidStateError(msg.str());
    }
    s -= xlog2x(lambda);
  }
  // -0.0 from an all-zero-entropy spectrum
  return s == 0.0 ? 0.0 : s;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > 1e-10) {
    throw InvalidStateError("von_neumann_entropy: trace is not 1");
  }
  return entropy_of_spectrum(eigvals_hermitian(rho));
}

double binary_entropy(double x) {
  if (!(x >= -1e-12 && x <= 1.0 + 1e-12)) {
    throw DomainError("binary_entropy: argument outside [0, 1]");
  }
  x = std::clamp(x, 0.0, 1.0);
  const double h = -xlog2x(x) - xlog2x(1.0 - x);
  return h == 0.0 ? 0.0 : h;
}

}  // namespace mubcorr
