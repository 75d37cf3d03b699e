#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mubcorr/linalg.hpp"

namespace mubcorr {

struct NelderMeadOptions {
  int max_iters = 2000;
  double simplex_tol = 1e-7;  // max coordinate distance of vertices from the best one
  double value_tol = 1e-9;    // max value spread across the simplex
  double initial_step = 0.5;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes f with the textbook simplex method
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
NelderMeadResult nelder_mead_minimize(const Objective& f, std::vector<double> x0, const NelderMeadOptions& opts);

/// Runs Nelder–Mead, then reseeds the simplex at the best point with a
/// smaller step until a pass no longer improves by more than value_tol.
/// The iteration budget is shared across passes.
NelderMeadResult nelder_mead_polished(const Objective& f, std::vector<double> x0, const NelderMeadOptions& opts,
                                      int max_passes = 4);

/// Number of real parameters of unitary_from_params for dimension d.
constexpr int unitary_param_count(int d) { return d * d; }

/// Hermitian generator: d diagonal entries then (re, im) of the strict upper
/// triangle in row-major order.
ComplexMatrix hermitian_from_params(std::span<const double> theta, int d);

/// U(θ) = exp(i H(θ)).
ComplexMatrix unitary_from_params(std::span<const double> theta, int d);

/// diag(1, e^{iφ_1}, ..., e^{iφ_{d-1}}).
ComplexMatrix phase_diagonal(std::span<const double> phases, int d);

}  // namespace mubcorr
