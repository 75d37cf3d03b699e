#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mubcorr/linalg.hpp"

namespace mubcorr {

/// Correlation coefficients r_j of (I⊗I + Σ r_j σ_j⊗σ_j)/4.
struct BlochTriple {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;

  std::array<double, 3> values() const { return {r1, r2, r3}; }
  /// Magnitudes sorted so that |r̄1| >= |r̄2| >= |r̄3|.
  std::array<double, 3> sorted_magnitudes() const;
  /// Weights of the state on |ψ->, |φ->, |φ+>, |ψ+> (its eigenvalues).
  std::array<double, 4> bell_weights() const;
  bool is_valid(double tol = 1e-12) const;
};

/// Schmidt coefficients λ_i of Σ √λ_i |i>|i>.
struct SchmidtVector {
  std::vector<double> lambdas;
};

struct BellDiagonalState {
  DensityMatrix state;
  BlochTriple triple;
};

/// (I − αP) / (d(d − α)), P the swap. d >= 2, α in [-1, 1].
DensityMatrix werner_state(int d, double alpha);

/// ((1 − β) I + (d²β − 1) P⁺) / (d² − 1). d >= 2, β in [0, 1].
DensityMatrix isotropic_state(int d, double beta);

DensityMatrix bell_diagonal(const BlochTriple& r);

DensityMatrix pure_from_schmidt(const SchmidtVector& s);

/// Bell basis: |φ±> = (|00> ± |11>)/√2, |ψ±> = (|01> ± |10>)/√2.
enum class BellLabel { PhiPlus, PhiMinus, PsiPlus, PsiMinus };
ComplexVector bell_vector(BellLabel which);

/// ½|ψ+><ψ+| + (p/2)|φ+><φ+| + ((1−p)/2)|φ−><φ−|.
BellDiagonalState fig3_rho1(double p);
/// p|ψ−><ψ−| + ((1−p)/2)(|ψ+><ψ+| + |φ+><φ+|).
BellDiagonalState fig3_rho2(double p);

/// Reads r_j = tr(ρ σ_j⊗σ_j) off a two-qubit state.
BlochTriple bloch_triple_of(const DensityMatrix& rho);

/// Deterministic 64-bit seed mixing (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Haar-random d×d unitary (QR of a complex Ginibre matrix with phase fix).
ComplexMatrix haar_unitary(int d, std::mt19937_64& rng);
ComplexMatrix haar_unitary(int d, std::uint64_t seed);

/// Partial trace of a Haar-random pure state on C^{d_a d_b} ⊗ C^rank over the
/// rank-dimensional ancilla. Deterministic for a given seed.
DensityMatrix random_density_matrix(int dim_a, int dim_b, int rank, std::uint64_t seed);

/// ρ_a ⊗ ρ_b with independent full-rank random factors.
DensityMatrix random_product_state(int dim_a, int dim_b, std::uint64_t seed);

/// (U_a ⊗ U_b) ρ (U_a ⊗ U_b)†.
DensityMatrix apply_local_unitaries(const DensityMatrix& rho, const ComplexMatrix& ua, const ComplexMatrix& ub);

/// { "dim_a": int, "dim_b": int, "matrix": [[[re, im], ...], ...] }, row-major.
std::string state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(std::string_view text);

void save_state(const DensityMatrix& rho, const std::filesystem::path& path);
DensityMatrix load_state(const std::filesystem::path& path);

}  // namespace mubcorr
