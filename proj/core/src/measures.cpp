#include "mubcorr/measures.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "mubcorr/optimizer.hpp"
#include "mubcorr/states.hpp"

namespace mubcorr {

namespace {

double spectrum_entropy_fast(const ComplexMatrix& m) {
  if (m.rows() == 1) return 0.0;
  if (m.rows() == 2) {
    // eigenvalues of a 2x2 Hermitian matrix in closed form
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
    const double mean = 0.5 * (a + d);
    return entropy_of_spectrum({mean - half_gap, mean + half_gap});
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return entropy_of_spectrum({ev.data(), ev.data() + ev.size()});
}

struct RestartOutcome {
  NelderMeadResult nm;
  double value = 0.0;  // maximized objective
};

/// Multi-start maximization. Restart r starts from a uniform draw in
/// [-π, π]^n using seed mix_seed(cfg.seed, stream * 7919 + r).
std::vector<RestartOutcome> multistart_maximize(const std::function<double(std::span<const double>)>& objective,
                                                int n_params, const OptimizerConfig& cfg, int restarts,
                                                std::uint64_t stream) {
  std::vector<RestartOutcome> out(static_cast<std::size_t>(restarts));
  NelderMeadOptions opts;
  opts.max_iters = cfg.max_iters;
  opts.simplex_tol = cfg.simplex_tol;
  opts.value_tol = cfg.value_tol;
  const Objective negated = [&](std::span<const double> x) { return -objective(x); };

  auto run_one = [&](int r) {
    std::mt19937_64 rng(mix_seed(cfg.seed, stream * 7919ULL + static_cast<std::uint64_t>(r)));
    std::uniform_real_distribution<double> uni(-std::numbers::pi, std::numbers::pi);
    std::vector<double> x0(static_cast<std::size_t>(n_params));
    for (auto& v : x0) v = uni(rng);
    RestartOutcome o;
    o.nm = nelder_mead_polished(negated, std::move(x0), opts);
    o.value = -o.nm.value;
    out[static_cast<std::size_t>(r)] = std::move(o);
  };

  const int workers = std::clamp(cfg.threads, 1, restarts);
  if (workers == 1) {
    for (int r = 0; r < restarts; ++r) run_one(r);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int r = next++; r < restarts; r = next++) run_one(r);
    });
  }
  pool.clear();
  return out;
}

std::size_t best_index(const std::vector<RestartOutcome>& outcomes) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < outcomes.size(); ++i) {
    if (outcomes[i].value > outcomes[best].value) best = i;
  }
  return best;
}

OptimizerResult summarize(const std::vector<RestartOutcome>& outcomes) {
  OptimizerResult res;
  for (const auto& o : outcomes) {
    res.per_restart_values.push_back(o.value);
    if (o.nm.converged) ++res.restarts_converged;
  }
  const auto& best = outcomes[best_index(outcomes)];
  res.value = best.value;
  res.basis_params = best.nm.x;
  return res;
}

void require_qudit_a(const DensityMatrix& rho, const char* what) {
  if (rho.dim_a() < 2) {
    std::ostringstream msg;
    msg << what << ": subsystem A must have dimension >= 2";
    throw DomainError(msg.str());
  }
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1 || max_iters < 1 || threads < 1) {
    throw DomainError("optimizer config: restarts, max_iters and threads must be positive");
  }
  if (!(simplex_tol > 0.0) || !(value_tol > 0.0) || !(chi_basis_slack > 0.0)) {
    throw DomainError("optimizer config: tolerances must be positive");
  }
}

MeasurementEnsemble measure_and_condition(const DensityMatrix& rho, const Basis& basis) {
  if (basis.dim() != rho.dim_a()) throw DomainError("measure_and_condition: basis dimension != dim_a");
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  MeasurementEnsemble ens;
  for (int k = 0; k < da; ++k) {
    // (<e_k| ⊗ I) ρ (|e_k> ⊗ I)
    ComplexMatrix cond = ComplexMatrix::Zero(db, db);
    for (int a = 0; a < da; ++a) {
      for (int ap = 0; ap < da; ++ap) {
        const Complex w = std::conj(basis.columns()(a, k)) * basis.columns()(ap, k);
        if (w == Complex(0.0, 0.0)) continue;
        cond += w * rho.block(a, ap);
      }
    }
    const double p = cond.trace().real();
    if (p < kMinOutcomeProbability) continue;
    ens.probs.push_back(p);
    ens.conditionals.push_back(0.5 * (cond + cond.adjoint()) / p);
  }
  return ens;
}

double holevo(const DensityMatrix& rho, const Basis& basis) {
  const MeasurementEnsemble ens = measure_and_condition(rho, basis);
  ComplexMatrix average = ComplexMatrix::Zero(rho.dim_b(), rho.dim_b());
  double mean_entropy = 0.0;
  for (std::size_t i = 0; i < ens.probs.size(); ++i) {
    average += ens.probs[i] * ens.conditionals[i];
    mean_entropy += ens.probs[i] * entropy_of_spectrum(eigvals_hermitian(ens.conditionals[i]));
  }
  const double chi = entropy_of_spectrum(eigvals_hermitian(average)) - mean_entropy;
  return std::max(chi, 0.0);
}

HolevoEvaluator::HolevoEvaluator(const DensityMatrix& rho)
    : dim_a_(rho.dim_a()), dim_b_(rho.dim_b()), bob_entropy_(von_neumann_entropy(reduced_b(rho))) {
  blocks_.reserve(static_cast<std::size_t>(dim_a_) * dim_a_);
  for (int a = 0; a < dim_a_; ++a) {
    for (int ap = 0; ap < dim_a_; ++ap) blocks_.push_back(rho.block(a, ap));
  }
}

double HolevoEvaluator::operator()(const ComplexMatrix& e) const {
  double mean_entropy = 0.0;
  ComplexMatrix cond(dim_b_, dim_b_);
  for (int k = 0; k < dim_a_; ++k) {
    cond.setZero();
    for (int a = 0; a < dim_a_; ++a) {
      const Complex ca = std::conj(e(a, k));
      for (int ap = 0; ap < dim_a_; ++ap) cond += (ca * e(ap, k)) * blocks_[static_cast<std::size_t>(a * dim_a_ + ap)];
    }
    const double p = cond.trace().real();
    if (p < kMinOutcomeProbability) continue;
    const ComplexMatrix normalized = 0.5 * (cond + cond.adjoint()) / p;
    mean_entropy += p * spectrum_entropy_fast(normalized);
  }
  return std::max(bob_entropy_ - mean_entropy, 0.0);
}

OptimizerResult classical_correlation_C1(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  cfg.validate();
  require_qudit_a(rho, "classical_correlation_C1");
  const int d = rho.dim_a();
  const HolevoEvaluator chi(rho);
  const auto objective = [&](std::span<const double> x) { return chi(unitary_from_params(x, d)); };
  const auto outcomes = multistart_maximize(objective, unitary_param_count(d), cfg, cfg.restarts, 1);
  OptimizerResult res = summarize(outcomes);
  res.bases.emplace_back(unitary_from_params(res.basis_params, d));
  return res;
}

OptimizerResult measure_C(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  cfg.validate();
  require_qudit_a(rho, "measure_C");
  const int d = rho.dim_a();
  const int nu = unitary_param_count(d);
  const HolevoEvaluator chi(rho);
  const ComplexMatrix fourier = fourier_basis(d).columns();
  const auto pair_of = [&](std::span<const double> x) {
    const ComplexMatrix u = unitary_from_params(x.first(static_cast<std::size_t>(nu)), d);
    ComplexMatrix second = u * phase_diagonal(x.subspan(static_cast<std::size_t>(nu)), d) * fourier;
    return std::pair<ComplexMatrix, ComplexMatrix>{u, std::move(second)};
  };
  const auto objective = [&](std::span<const double> x) {
    const auto [first, second] = pair_of(x);
    return std::min(chi(first), chi(second));
  };
  const auto outcomes = multistart_maximize(objective, nu + d - 1, cfg, cfg.restarts, 2);
  OptimizerResult res = summarize(outcomes);
  auto [first, second] = pair_of(res.basis_params);
  res.bases.emplace_back(std::move(first));
  res.bases.emplace_back(std::move(second));
  return res;
}

OptimizerResult measure_Cm(const DensityMatrix& rho, int m, const OptimizerConfig& cfg) {
  cfg.validate();
  require_qudit_a(rho, "measure_Cm");
  const int d = rho.dim_a();
  if (m < 2 || m > d + 1) {
    std::ostringstream msg;
    msg << "measure_Cm: m = " << m << " outside [2, " << d + 1 << "]";
    throw DomainError(msg.str());
  }
  if (m == 2) return measure_C(rho, cfg);
  if (!is_prime(d)) {
    std::ostringstream msg;
    msg << "measure_Cm: m >= 3 requires prime dim_a, got " << d;
    throw DomainError(msg.str());
  }
  const MubSet full = wootters_fields_mubs(d);
  const HolevoEvaluator chi(rho);
  const auto objective = [&](std::span<const double> x) {
    const ComplexMatrix u = unitary_from_params(x, d);
    double worst = std::numeric_limits<double>::infinity();
    for (int k = 0; k < m; ++k) worst = std::min(worst, chi(u * full[static_cast<std::size_t>(k)].columns()));
    return worst;
  };
  const auto outcomes = multistart_maximize(objective, unitary_param_count(d), cfg, cfg.restarts,
                                            100 + static_cast<std::uint64_t>(m));
  OptimizerResult res = summarize(outcomes);
  const ComplexMatrix u = unitary_from_params(res.basis_params, d);
  for (int k = 0; k < m; ++k) res.bases.emplace_back(u * full[static_cast<std::size_t>(k)].columns());
  return res;
}

OptimizerResult measure_Q2(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  cfg.validate();
  require_qudit_a(rho, "measure_Q2");
  const int d = rho.dim_a();
  const int nu = unitary_param_count(d);
  const HolevoEvaluator chi(rho);
  const auto c1_objective = [&](std::span<const double> x) { return chi(unitary_from_params(x, d)); };
  const auto c1_outcomes = multistart_maximize(c1_objective, nu, cfg, cfg.restarts, 1);
  const double c1 = c1_outcomes[best_index(c1_outcomes)].value;

  const ComplexMatrix fourier = fourier_basis(d).columns();
  const int mu_restarts = std::max(2, cfg.restarts / 4);

  OptimizerResult res;
  res.value = -std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < c1_outcomes.size(); ++r) {
    const auto& cand = c1_outcomes[r];
    if (cand.value < c1 - cfg.chi_basis_slack) continue;
    const ComplexMatrix chi_basis = unitary_from_params(cand.nm.x, d);
    const auto mu_objective = [&](std::span<const double> phi) {
      return chi(chi_basis * phase_diagonal(phi, d) * fourier);
    };
    const auto mu_outcomes = multistart_maximize(mu_objective, d - 1, cfg, mu_restarts, 1000 + r);
    const auto& best = mu_outcomes[best_index(mu_outcomes)];
    res.per_restart_values.push_back(best.value);
    for (const auto& o : mu_outcomes) {
      if (o.nm.converged) ++res.restarts_converged;
    }
    if (best.value > res.value) {
      res.value = best.value;
      res.basis_params = cand.nm.x;
      res.basis_params.insert(res.basis_params.end(), best.nm.x.begin(), best.nm.x.end());
      res.bases.clear();
      res.bases.emplace_back(chi_basis);
      res.bases.emplace_back(chi_basis * phase_diagonal(best.nm.x, d) * fourier);
    }
  }
  return res;
}

double mutual_information(const DensityMatrix& rho) {
  const double i = von_neumann_entropy(reduced_a(rho)) + von_neumann_entropy(reduced_b(rho)) -
                   entropy_of_spectrum(eigvals_hermitian(rho.matrix()));
  return std::abs(i) < 1e-13 ? 0.0 : i;
}

double quantum_discord(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  const double d = mutual_information(rho) - classical_correlation_C1(rho, cfg).value;
  return (d < 0.0 && d >= -1e-6) ? 0.0 : d;
}

}  // namespace mubcorr
