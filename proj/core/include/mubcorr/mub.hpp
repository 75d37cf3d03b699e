#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mubcorr/linalg.hpp"

namespace mubcorr {

/// Orthonormal basis of C^d stored as a unitary matrix; column k is |e_k>.
class Basis {
 public:
  /// Throws DomainError unless ‖U†U − I‖_max <= tol.
  explicit Basis(ComplexMatrix columns, double tol = 1e-10);

  int dim() const { return static_cast<int>(columns_.rows()); }
  const ComplexMatrix& columns() const { return columns_; }
  ComplexVector vector(int k) const { return columns_.col(k); }

 private:
  ComplexMatrix columns_;
};

/// Bases that are pairwise mutually unbiased. Validated on construction.
class MubSet {
 public:
  MubSet(int dim, std::vector<Basis> bases, double tol = 1e-10);

  int dim() const { return dim_; }
  std::size_t size() const { return bases_.size(); }
  const std::vector<Basis>& bases() const { return bases_; }
  const Basis& operator[](std::size_t i) const { return bases_[i]; }

 private:
  int dim_;
  std::vector<Basis> bases_;
};

Basis computational_basis(int d);

/// Column k has entries ω^{jk}/√d, ω = e^{2πi/d}.
Basis fourier_basis(int d);

bool is_prime(int n);

/// Full set of d+1 MUBs for prime d in [2, 13].
/// d = 2: (Z, X, Y) eigenbases. Odd d: computational basis followed by the
/// quadratic-phase bases (1/√d) Σ_j ω^{r j² + k j} |j>, r = 0..d-1.
MubSet wootters_fields_mubs(int d);

/// Every overlap modulus |<ψ_i|φ_j>| within tol of 1/√d.
bool is_mutually_unbiased(const Basis& b1, const Basis& b2, double tol = 1e-10);

/// Largest deviation of an overlap modulus from 1/√d.
double unbiasedness_defect(const ComplexMatrix& b1, const ComplexMatrix& b2);

/// Applies the same unitary to every basis of the set.
MubSet rotate_mub_set(const ComplexMatrix& u, const MubSet& set);

/// { "dim": d, "bases": [ [ column, ... ], ... ] }, column = [[re, im], ...].
std::string mub_set_to_json(const MubSet& set);
MubSet mub_set_from_json(std::string_view text);

}  // namespace mubcorr
