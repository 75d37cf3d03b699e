#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mubcorr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: out-of-range parameters, dimension mismatches, malformed files.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix that is not a valid density matrix (non-Hermitian, negative, wrong trace).
class InvalidStateError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The optimizer or a numerical procedure could not deliver a result.
class NumericalError : public Error {
 public:
  using Error::Error;
};

enum class Subsystem { A, B };

// Tolerances shared across the library.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kNegativeEigenTol = 1e-8;
inline constexpr double kEigenClampTol = 1e-10;

/// Hermitian, positive semidefinite, unit-trace matrix on H_a ⊗ H_b.
/// Composite index ordering is i_a * dim_b + i_b.
class DensityMatrix {
 public:
  /// Validates the invariants and throws InvalidStateError naming the
  /// offending entry or eigenvalue.
  DensityMatrix(ComplexMatrix mat, int dim_a, int dim_b);

  /// Skips the PSD check (eigendecomposition); still checks shape, Hermiticity and trace.
  static DensityMatrix trusted(ComplexMatrix mat, int dim_a, int dim_b);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim() const { return dim_a_ * dim_b_; }
  const ComplexMatrix& matrix() const { return mat_; }

  /// Diagonal-block access in the computational basis of A: <a|rho|a'> on H_b.
  ComplexMatrix block(int a, int a_prime) const;

 private:
  DensityMatrix(ComplexMatrix mat, int dim_a, int dim_b, bool check_psd);

  ComplexMatrix mat_;
  int dim_a_;
  int dim_b_;
};

ComplexMatrix identity(int d);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
/// Swap operator P = sum_ij |i><j| ⊗ |j><i| on C^d ⊗ C^d.
ComplexMatrix swap_operator(int d);
/// |Phi+> = (1/sqrt d) sum_i |i>|i>.
ComplexVector max_entangled_vector(int d);

/// Kronecker product: (A⊗B)[i*rB+k, j*cB+l] = A[i,j] * B[k,l].
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out `traced` and returns the reduced state of the other subsystem.
ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem traced);
ComplexMatrix partial_trace(const ComplexMatrix& mat, int dim_a, int dim_b, Subsystem traced);

inline ComplexMatrix reduced_a(const DensityMatrix& rho) { return partial_trace(rho, Subsystem::B); }
inline ComplexMatrix reduced_b(const DensityMatrix& rho) { return partial_trace(rho, Subsystem::A); }

double max_abs(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& u, double tol);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns are eigenvectors
};

/// Real eigenvalues in ascending order. Throws DomainError if A is not
/// Hermitian within 1e-10.
std::vector<double> eigvals_hermitian(const ComplexMatrix& a);
HermitianEigen eigh(const ComplexMatrix& a);

/// exp(i H) for Hermitian H via its eigendecomposition.
ComplexMatrix expm_i_hermitian(const ComplexMatrix& h);

/// -sum lambda log2 lambda over a spectrum. Values in [-1e-8, 0) count as 0,
/// anything lower throws InvalidStateError.
double entropy_of_spectrum(const std::vector<double>& spectrum);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const ComplexMatrix& rho);

/// h(x) = -x log2 x - (1-x) log2(1-x).
double binary_entropy(double x);

/// x log2 x with the 0 log 0 = 0 convention.
double xlog2x(double x);

}  // namespace mubcorr
