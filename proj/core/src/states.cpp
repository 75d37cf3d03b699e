#include "mubcorr/states.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace mubcorr {

namespace {

ComplexMatrix hermitize(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

DensityMatrix two_qubit(const ComplexMatrix& m) { return DensityMatrix(hermitize(m), 2, 2); }

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

void require_unit_interval(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << what << ": parameter " << p << " outside [0, 1]";
    throw DomainError(msg.str());
  }
}

ComplexMatrix ginibre(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix random_full_rank_state(int d, std::mt19937_64& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return hermitize(m);
}

}  // namespace

std::array<double, 3> BlochTriple::sorted_magnitudes() const {
  std::array<double, 3> m = {std::abs(r1), std::abs(r2), std::abs(r3)};
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

std::array<double, 4> BlochTriple::bell_weights() const {
  return {(1.0 - r1 - r2 - r3) / 4.0, (1.0 - r1 + r2 + r3) / 4.0, (1.0 + r1 - r2 + r3) / 4.0,
          (1.0 + r1 + r2 - r3) / 4.0};
}

bool BlochTriple::is_valid(double tol) const {
  const auto w = bell_weights();
  return std::all_of(w.begin(), w.end(), [tol](double x) { return x >= -tol; });
}

DensityMatrix werner_state(int d, double alpha) {
  if (d < 2) throw DomainError("werner_state: d must be >= 2");
  if (!(alpha >= -1.0 && alpha <= 1.0)) {
    std::ostringstream msg;
    msg << "werner_state: alpha " << alpha << " outside [-1, 1]";
    throw DomainError(msg.str());
  }
  const ComplexMatrix m = (identity(d * d) - alpha * swap_operator(d)) / (d * (d - alpha));
  return DensityMatrix(m, d, d);
}

DensityMatrix isotropic_state(int d, double beta) {
  if (d < 2) throw DomainError("isotropic_state: d must be >= 2");
  if (!(beta >= 0.0 && beta <= 1.0)) {
    std::ostringstream msg;
    msg << "isotropic_state: beta " << beta << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  const double dd = static_cast<double>(d) * d;
  const ComplexMatrix m =
      ((1.0 - beta) * identity(d * d) + (dd * beta - 1.0) * projector(max_entangled_vector(d))) / (dd - 1.0);
  return DensityMatrix(hermitize(m), d, d);
}

DensityMatrix bell_diagonal(const BlochTriple& r) {
  if (!r.is_valid()) {
    const auto w = r.bell_weights();
    std::ostringstream msg;
    msg << "bell_diagonal: triple (" << r.r1 << ", " << r.r2 << ", " << r.r3
        << ") is not a state (minimum eigenvalue " << *std::min_element(w.begin(), w.end()) << ")";
    throw InvalidStateError(msg.str());
  }
  ComplexMatrix m = identity(4);
  m += r.r1 * tensor_product(pauli_x(), pauli_x());
  m += r.r2 * tensor_product(pauli_y(), pauli_y());
  m += r.r3 * tensor_product(pauli_z(), pauli_z());
  return two_qubit(m / 4.0);
}

DensityMatrix pure_from_schmidt(const SchmidtVector& s) {
  const auto& l = s.lambdas;
  if (l.empty()) throw DomainError("pure_from_schmidt: empty Schmidt vector");
  double total = 0.0;
  for (double x : l) {
    if (!(x >= 0.0)) throw DomainError("pure_from_schmidt: negative Schmidt coefficient");
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-12) throw DomainError("pure_from_schmidt: coefficients do not sum to 1");
  const int d = static_cast<int>(l.size());
  ComplexVector psi = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) psi(i * d + i) = std::sqrt(l[i]);
  ComplexMatrix m = projector(psi);
  // restore unit trace lost to rounding in the square roots
  m /= m.trace().real();
  return DensityMatrix::trusted(hermitize(m), d, d);
}

ComplexVector bell_vector(BellLabel which) {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexVector v = ComplexVector::Zero(4);
  switch (which) {
    case BellLabel::PhiPlus: v(0) = s; v(3) = s; break;
    case BellLabel::PhiMinus: v(0) = s; v(3) = -s; break;
    case BellLabel::PsiPlus: v(1) = s; v(2) = s; break;
    case BellLabel::PsiMinus: v(1) = s; v(2) = -s; break;
  }
  return v;
}

BlochTriple bloch_triple_of(const DensityMatrix& rho) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2) throw DomainError("bloch_triple_of: two-qubit state required");
  const auto corr = [&](const ComplexMatrix& s) { return (rho.matrix() * tensor_product(s, s)).trace().real(); };
  return {corr(pauli_x()), corr(pauli_y()), corr(pauli_z())};
}

BellDiagonalState fig3_rho1(double p) {
  require_unit_interval(p, "fig3_rho1");
  const ComplexMatrix m = 0.5 * projector(bell_vector(BellLabel::PsiPlus)) +
                          (p / 2.0) * projector(bell_vector(BellLabel::PhiPlus)) +
                          ((1.0 - p) / 2.0) * projector(bell_vector(BellLabel::PhiMinus));
  DensityMatrix rho = two_qubit(m);
  const BlochTriple t = bloch_triple_of(rho);
  return {std::move(rho), t};
}

BellDiagonalState fig3_rho2(double p) {
  require_unit_interval(p, "fig3_rho2");
  const ComplexMatrix m = p * projector(bell_vector(BellLabel::PsiMinus)) +
                          ((1.0 - p) / 2.0) * (projector(bell_vector(BellLabel::PsiPlus)) +
                                               projector(bell_vector(BellLabel::PhiPlus)));
  DensityMatrix rho = two_qubit(m);
  const BlochTriple t = bloch_triple_of(rho);
  return {std::move(rho), t};
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ComplexMatrix haar_unitary(int d, std::mt19937_64& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < d; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

ComplexMatrix haar_unitary(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_unitary(d, rng);
}

DensityMatrix random_density_matrix(int dim_a, int dim_b, int rank, std::uint64_t seed) {
  if (dim_a < 1 || dim_b < 1) throw DomainError("random_density_matrix: dimensions must be positive");
  const int n = dim_a * dim_b;
  if (rank < 1 || rank > n) {
    std::ostringstream msg;
    msg << "random_density_matrix: rank " << rank << " outside [1, " << n << "]";
    throw DomainError(msg.str());
  }
  std::mt19937_64 rng(seed);
  // rows index the system, columns the ancilla of a Haar-random pure state
  const ComplexMatrix g = ginibre(n, rank, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix::trusted(hermitize(m), dim_a, dim_b);
}

DensityMatrix random_product_state(int dim_a, int dim_b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ComplexMatrix ra = random_full_rank_state(dim_a, rng);
  const ComplexMatrix rb = random_full_rank_state(dim_b, rng);
  ComplexMatrix m = tensor_product(ra, rb);
  m /= m.trace().real();
  return DensityMatrix::trusted(hermitize(m), dim_a, dim_b);
}

DensityMatrix apply_local_unitaries(const DensityMatrix& rho, const ComplexMatrix& ua, const ComplexMatrix& ub) {
  if (ua.rows() != rho.dim_a() || ub.rows() != rho.dim_b()) {
    throw DomainError("apply_local_unitaries: dimension mismatch");
  }
  const ComplexMatrix u = tensor_product(ua, ub);
  ComplexMatrix m = u * rho.matrix() * u.adjoint();
  m /= m.trace().real();
  return DensityMatrix::trusted(hermitize(m), rho.dim_a(), rho.dim_b());
}

std::string state_to_json(const DensityMatrix& rho) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < rho.matrix().rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < rho.matrix().cols(); ++j) {
      row.push_back({rho.matrix()(i, j).real(), rho.matrix()(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json doc = {{"dim_a", rho.dim_a()}, {"dim_b", rho.dim_b()}, {"matrix", std::move(rows)}};
  return doc.dump(1);
}

DensityMatrix state_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("state JSON is malformed: ") + e.what());
  }
  try {
    const int da = doc.at("dim_a").get<int>();
    const int db = doc.at("dim_b").get<int>();
    if (da < 1 || db < 1) throw DomainError("state JSON: dimensions must be positive");
    const int n = da * db;
    const auto& rows = doc.at("matrix");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) {
      throw DomainError("state JSON: matrix must have dim_a*dim_b rows");
    }
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      const auto& row = rows.at(i);
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
        std::ostringstream msg;
        msg << "state JSON: row " << i << " must have " << n << " entries";
        throw DomainError(msg.str());
      }
      for (int j = 0; j < n; ++j) {
        const auto& e = row.at(j);
        if (!e.is_array() || e.size() != 2) {
          std::ostringstream msg;
          msg << "state JSON: entry (" << i << ", " << j << ") must be [re, im]";
          throw DomainError(msg.str());
        }
        m(i, j) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
      }
    }
    return DensityMatrix(std::move(m), da, db);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("state JSON: ") + e.what());
  }
}

void save_state(const DensityMatrix& rho, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open " + path.string() + " for writing");
  out << state_to_json(rho) << '\n';
  if (!out) throw DomainError("failed writing " + path.string());
}

DensityMatrix load_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open state file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return state_from_json(buf.str());
}

}  // namespace mubcorr
