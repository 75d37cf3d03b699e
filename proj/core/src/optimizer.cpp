#include "mubcorr/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mubcorr {

NelderMeadResult nelder_mead_minimize(const Objective& f, std::vector<double> x0, const NelderMeadOptions& opts) {
  const std::size_t n = x0.size();
  NelderMeadResult res;
  if (n == 0) {
    res.x = std::move(x0);
    res.value = f(res.x);
    res.evaluations = 1;
    res.converged = true;
    return res;
  }

  std::vector<std::vector<double>> pts(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += opts.initial_step;
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);
  res.evaluations = static_cast<int>(n + 1);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);

  auto eval = [&](const std::vector<double>& x) {
    ++res.evaluations;
    return f(x);
  };

  int it = 0;
  for (; it < opts.max_iters; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];

    double spread = vals[worst] - vals[best];
    double diameter = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k) diameter = std::max(diameter, std::abs(pts[i][k] - pts[best][k]));
    }
    if (spread <= opts.value_tol && diameter <= opts.simplex_tol) {
      res.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k];
    }
    for (auto& c : centroid) c /= static_cast<double>(n);

    for (std::size_t k = 0; k < n; ++k) trial[k] = centroid[k] + (centroid[k] - pts[worst][k]);
    const double f_reflect = eval(trial);

    if (f_reflect < vals[best]) {
      for (std::size_t k = 0; k < n; ++k) trial2[k] = centroid[k] + 2.0 * (centroid[k] - pts[worst][k]);
      const double f_expand = eval(trial2);
      if (f_expand < f_reflect) {
        pts[worst] = trial2;
        vals[worst] = f_expand;
      } else {
        pts[worst] = trial;
        vals[worst] = f_reflect;
      }
      continue;
    }
    if (f_reflect < vals[second_worst]) {
      pts[worst] = trial;
      vals[worst] = f_reflect;
      continue;
    }

    const bool outside = f_reflect < vals[worst];
    for (std::size_t k = 0; k < n; ++k) {
      trial2[k] = outside ? centroid[k] + 0.5 * (trial[k] - centroid[k])
                          : centroid[k] + 0.5 * (pts[worst][k] - centroid[k]);
    }
    const double f_contract = eval(trial2);
    if (f_contract < (outside ? f_reflect : vals[worst])) {
      pts[worst] = trial2;
      vals[worst] = f_contract;
      continue;
    }

    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k) pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
      vals[i] = eval(pts[i]);
    }
  }

  const auto best_it = std::min_element(vals.begin(), vals.end());
  const auto best = static_cast<std::size_t>(best_it - vals.begin());
  res.x = pts[best];
  res.value = vals[best];
  res.iterations = it;
  return res;
}

NelderMeadResult nelder_mead_polished(const Objective& f, std::vector<double> x0, const NelderMeadOptions& opts,
                                      int max_passes) {
  NelderMeadOptions pass_opts = opts;
  NelderMeadResult best = nelder_mead_minimize(f, std::move(x0), pass_opts);
  int used = best.iterations;
  int evals = best.evaluations;
  for (int pass = 1; pass < max_passes; ++pass) {
    pass_opts.max_iters = opts.max_iters - used;
    if (pass_opts.max_iters <= 0) break;
    pass_opts.initial_step = std::max(opts.initial_step * std::pow(0.25, pass), 10.0 * opts.simplex_tol);
    NelderMeadResult next = nelder_mead_minimize(f, best.x, pass_opts);
    used += next.iterations;
    evals += next.evaluations;
    const bool improved = next.value < best.value - opts.value_tol;
    if (next.value <= best.value) {
      best.x = std::move(next.x);
      best.value = next.value;
    }
    best.converged = next.converged;
    if (!improved) break;
  }
  best.iterations = used;
  best.evaluations = evals;
  return best;
}

ComplexMatrix hermitian_from_params(std::span<const double> theta, int d) {
  if (theta.size() < static_cast<std::size_t>(unitary_param_count(d))) {
    throw DomainError("hermitian_from_params: too few parameters");
  }
  ComplexMatrix h = ComplexMatrix::Zero(d, d);
  std::size_t k = 0;
  for (int i = 0; i < d; ++i) h(i, i) = theta[k++];
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const Complex z(theta[k], theta[k + 1]);
      k += 2;
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  return h;
}

ComplexMatrix unitary_from_params(std::span<const double> theta, int d) {
  return expm_i_hermitian(hermitian_from_params(theta, d));
}

ComplexMatrix phase_diagonal(std::span<const double> phases, int d) {
  if (phases.size() + 1 < static_cast<std::size_t>(d)) throw DomainError("phase_diagonal: too few phases");
  ComplexMatrix m = ComplexMatrix::Identity(d, d);
  for (int k = 1; k < d; ++k) m(k, k) = std::polar(1.0, phases[k - 1]);
  return m;
}

}  // namespace mubcorr
