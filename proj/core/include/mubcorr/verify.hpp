#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mubcorr/measures.hpp"
#include "mubcorr/mub.hpp"

namespace mubcorr {

/// Threshold above which a Holevo quantity counts as nonzero.
inline constexpr double kNonzeroChi = 1e-9;

enum class WitnessPath { Direct, EpsilonRotation };

std::string_view to_string(WitnessPath path);

/// A mutually unbiased pair on which both Holevo quantities are nonzero.
struct Witness {
  Basis basis_1;
  Basis basis_2;
  double chi_1 = 0.0;
  double chi_2 = 0.0;
  double epsilon_used = 0.0;
  WitnessPath path = WitnessPath::Direct;
};

struct VerificationFailure {
  std::uint64_t seed = 0;
  std::string diagnostics;
};

struct VerificationReport {
  int samples = 0;
  int products_detected = 0;
  int witnesses_found = 0;
  std::vector<VerificationFailure> failures;
  /// min over witnesses of min(chi_1, chi_2); +inf when there are none.
  double min_chi_over_witnesses = 0.0;
};

/// ‖ρ − tr_B ρ ⊗ tr_A ρ‖_F <= tol.
bool is_product_state(const DensityMatrix& rho, double tol = 1e-10);

/// Raised when the ε schedule is exhausted without a witness.
class WitnessSearchError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Embedded 2x2 rotation [[√(1−ε²), ε e^{iφ}], [−ε e^{−iφ}, √(1−ε²)]] acting on
/// columns k and l of `frame`, identity on the rest, mapped back to the
/// standard basis: frame · V · frame†.
ComplexMatrix embedded_rotation(const ComplexMatrix& frame, int k, int l, double epsilon, double phase = 0.0);

/// Indices (k, l), k < l, of the off-diagonal Bob block of ρ with the largest
/// Frobenius norm when A is written in `frame`.
std::pair<int, int> largest_off_diagonal_block(const DensityMatrix& rho, const ComplexMatrix& frame);

std::vector<double> default_epsilon_schedule();

/// Builds a witness following the constructive argument: approximate χ-basis
/// E, F = E·Fourier; if χ(F) vanishes, rotate both bases in the span of the
/// dominant off-diagonal block by U₂(ε) for decreasing ε.
Witness find_witness_mub_pair(const DensityMatrix& rho, const OptimizerConfig& cfg,
                              const std::vector<double>& eps_schedule = default_epsilon_schedule());

/// Samples random states, classifies each as product or finds a witness, and
/// tallies the outcomes. A `product_fraction` share of the samples are
/// explicit products ρ_a ⊗ ρ_b (evenly spread); the rest cycle through full
/// rank, rank 1 and rank 2. Per-sample seeds are mix_seed(seed, index).
VerificationReport verify_nullity_theorem(int samples, int dim_a, int dim_b, std::uint64_t seed,
                                          const OptimizerConfig& cfg, double product_fraction = 0.1);

/// Number of explicit product states verify_nullity_theorem injects.
int injected_product_count(int samples, double product_fraction);

std::string report_to_json(const VerificationReport& report);

}  // namespace mubcorr
