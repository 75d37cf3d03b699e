#pragma once

#include <cstdint>
#include <vector>

#include "mubcorr/linalg.hpp"
#include "mubcorr/mub.hpp"

namespace mubcorr {

/// Outcome probabilities and Bob's conditional states after Alice measures
/// in a basis. Outcomes with p < 1e-14 are dropped.
struct MeasurementEnsemble {
  std::vector<double> probs;
  std::vector<ComplexMatrix> conditionals;
};

struct OptimizerConfig {
  int restarts = 24;
  int max_iters = 2000;
  double simplex_tol = 1e-7;
  double value_tol = 1e-9;
  std::uint64_t seed = 0;
  /// C1 window used to collect candidate χ-bases for Q2.
  double chi_basis_slack = 1e-6;
  /// Restarts run on this many worker threads; results do not depend on it.
  int threads = 1;

  void validate() const;
};

struct OptimizerResult {
  double value = 0.0;
  std::vector<double> basis_params;
  std::vector<Basis> bases;
  int restarts_converged = 0;
  std::vector<double> per_restart_values;
};

inline constexpr double kMinOutcomeProbability = 1e-14;

MeasurementEnsemble measure_and_condition(const DensityMatrix& rho, const Basis& basis);

/// χ{p_i; ρ_i^b} = S(Σ p_i ρ_i^b) − Σ p_i S(ρ_i^b), clamped below at 0.
double holevo(const DensityMatrix& rho, const Basis& basis);

/// Holevo quantity evaluator for repeated queries on one state. Caches the
/// Bob-side blocks <a|ρ|a'> and S(ρ_b); accepts raw basis columns.
class HolevoEvaluator {
 public:
  explicit HolevoEvaluator(const DensityMatrix& rho);

  double operator()(const ComplexMatrix& basis_columns) const;
  double bob_entropy() const { return bob_entropy_; }
  int dim_a() const { return dim_a_; }

 private:
  int dim_a_;
  int dim_b_;
  std::vector<ComplexMatrix> blocks_;  // blocks_[a * dim_a + a']
  double bob_entropy_;
};

/// C1: maximum Holevo quantity over all bases of A (the χ-basis value).
OptimizerResult classical_correlation_C1(const DensityMatrix& rho, const OptimizerConfig& cfg);

/// max over MU pairs (U E₀, U D_φ F₀) of min(χ₁, χ₂).
OptimizerResult measure_C(const DensityMatrix& rho, const OptimizerConfig& cfg);

/// max over U of min_k χ(U B_k) for the first m bases of the full prime-d
/// MUB set. m = 2 delegates to measure_C.
OptimizerResult measure_Cm(const DensityMatrix& rho, int m, const OptimizerConfig& cfg);

/// Max Holevo quantity over bases MU to a χ-basis, maximized over every
/// χ-basis candidate found within chi_basis_slack of C1.
OptimizerResult measure_Q2(const DensityMatrix& rho, const OptimizerConfig& cfg);

/// S(ρ_a) + S(ρ_b) − S(ρ_ab).
double mutual_information(const DensityMatrix& rho);

/// I(ρ) − C1(ρ) with rank-one projective measurements on A.
double quantum_discord(const DensityMatrix& rho, const OptimizerConfig& cfg);

}  // namespace mubcorr
