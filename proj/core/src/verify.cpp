#include "mubcorr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "mubcorr/states.hpp"

namespace mubcorr {

std::string_view to_string(WitnessPath path) {
  return path == WitnessPath::Direct ? "direct" : "epsilon-rotation";
}

bool is_product_state(const DensityMatrix& rho, double tol) {
  const ComplexMatrix product = tensor_product(reduced_a(rho), reduced_b(rho));
  return (rho.matrix() - product).norm() <= tol;
}

ComplexMatrix embedded_rotation(const ComplexMatrix& frame, int k, int l, double epsilon, double phase) {
  const int d = static_cast<int>(frame.rows());
  if (k < 0 || l < 0 || k >= d || l >= d || k == l) throw DomainError("embedded_rotation: bad block indices");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw DomainError("embedded_rotation: epsilon outside [0, 1]");
  const double c = std::sqrt(1.0 - epsilon * epsilon);
  const Complex tilt = std::polar(epsilon, phase);
  ComplexMatrix v = ComplexMatrix::Identity(d, d);
  v(k, k) = c;
  v(k, l) = tilt;
  v(l, k) = -std::conj(tilt);
  v(l, l) = c;
  return frame * v * frame.adjoint();
}

std::pair<int, int> largest_off_diagonal_block(const DensityMatrix& rho, const ComplexMatrix& frame) {
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  const ComplexMatrix change = tensor_product(frame, identity(db));
  const ComplexMatrix in_frame = change.adjoint() * rho.matrix() * change;
  std::pair<int, int> best{0, 1};
  double best_norm = -1.0;
  for (int k = 0; k < da; ++k) {
    for (int l = k + 1; l < da; ++l) {
      const double n = in_frame.block(static_cast<Eigen::Index>(k) * db, static_cast<Eigen::Index>(l) * db, db, db).norm();
      if (n > best_norm) {
        best_norm = n;
        best = {k, l};
      }
    }
  }
  return best;
}

std::vector<double> default_epsilon_schedule() { return {0.2, 0.1, 0.05, 0.025, 0.0125}; }

Witness find_witness_mub_pair(const DensityMatrix& rho, const OptimizerConfig& cfg,
                              const std::vector<double>& eps_schedule) {
  if (is_product_state(rho)) throw DomainError("find_witness_mub_pair: input is a product state");
  const int d = rho.dim_a();

  const OptimizerResult c1 = classical_correlation_C1(rho, cfg);
  const Basis& e = c1.bases.front();
  const Basis f(e.columns() * fourier_basis(d).columns());
  const double chi_e = holevo(rho, e);
  const double chi_f = holevo(rho, f);
  if (chi_e <= kNonzeroChi) {
    std::ostringstream msg;
    msg << "chi-basis search returned chi = " << chi_e << " (C1 = " << c1.value << ")";
    throw WitnessSearchError(msg.str());
  }
  if (chi_f > kNonzeroChi) return Witness{e, f, chi_e, chi_f, 0.0, WitnessPath::Direct};

  const auto [k, l] = largest_off_diagonal_block(rho, f.columns());
  // The real rotation is tried first; a quarter-turn phase covers blocks
  // whose Hermitian part vanishes.
  for (double phase : {0.0, std::numbers::pi / 2.0}) {
    for (double eps : eps_schedule) {
      const ComplexMatrix w = embedded_rotation(f.columns(), k, l, eps, phase);
      Basis b1(w * e.columns());
      Basis b2(w * f.columns());
      const double chi_1 = holevo(rho, b1);
      const double chi_2 = holevo(rho, b2);
      if (chi_1 > kNonzeroChi && chi_2 > kNonzeroChi) {
        return Witness{std::move(b1), std::move(b2), chi_1, chi_2, eps, WitnessPath::EpsilonRotation};
      }
    }
  }
  std::ostringstream msg;
  msg << "epsilon schedule exhausted: chi(E) = " << chi_e << ", chi(F) = " << chi_f << ", block (" << k << ", "
      << l << ")";
  throw WitnessSearchError(msg.str());
}

namespace {

bool is_injected_product(int index, double fraction) {
  return std::floor((index + 1) * fraction) > std::floor(index * fraction);
}

}  // namespace

int injected_product_count(int samples, double product_fraction) {
  int count = 0;
  for (int i = 0; i < samples; ++i) count += is_injected_product(i, product_fraction) ? 1 : 0;
  return count;
}

VerificationReport verify_nullity_theorem(int samples, int dim_a, int dim_b, std::uint64_t seed,
                                          const OptimizerConfig& cfg, double product_fraction) {
  if (samples < 1) throw DomainError("verify_nullity_theorem: samples must be >= 1");
  if (!(product_fraction >= 0.0 && product_fraction <= 1.0)) {
    throw DomainError("verify_nullity_theorem: product_fraction outside [0, 1]");
  }
  if (dim_a < 2 || dim_b < 1) throw DomainError("verify_nullity_theorem: need dim_a >= 2 and dim_b >= 1");
  cfg.validate();
  const int n = dim_a * dim_b;
  VerificationReport report;
  report.samples = samples;
  report.min_chi_over_witnesses = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const std::uint64_t sample_seed = mix_seed(seed, static_cast<std::uint64_t>(i));
    DensityMatrix rho = [&] {
      if (is_injected_product(i, product_fraction)) return random_product_state(dim_a, dim_b, sample_seed);
      const int rank = (i % 3 == 0) ? n : std::min(i % 3, n);
      return random_density_matrix(dim_a, dim_b, rank, sample_seed);
    }();
    if (is_product_state(rho)) {
      ++report.products_detected;
      continue;
    }
    OptimizerConfig sample_cfg = cfg;
    sample_cfg.seed = sample_seed;
    try {
      const Witness w = find_witness_mub_pair(rho, sample_cfg);
      ++report.witnesses_found;
      report.min_chi_over_witnesses = std::min(report.min_chi_over_witnesses, std::min(w.chi_1, w.chi_2));
    } catch (const NumericalError& err) {
      report.failures.push_back({sample_seed, err.what()});
    }
  }
  return report;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) failures.push_back({{"seed", f.seed}, {"diagnostics", f.diagnostics}});
  nlohmann::json doc = {{"samples", report.samples},
                        {"products_detected", report.products_detected},
                        {"witnesses_found", report.witnesses_found},
                        {"failures", std::move(failures)}};
  if (std::isfinite(report.min_chi_over_witnesses)) {
    doc["min_chi_over_witnesses"] = report.min_chi_over_witnesses;
  } else {
    doc["min_chi_over_witnesses"] = nullptr;
  }
  return doc.dump(2);
}

}  // namespace mubcorr
