#include "mubcorr/closed_form.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace mubcorr {

namespace {

void check_werner(int d, double alpha) {
  if (d < 2 || !(alpha >= -1.0 && alpha <= 1.0)) {
    std::ostringstream msg;
    msg << "Werner parameters out of domain: d = " << d << ", alpha = " << alpha;
    throw DomainError(msg.str());
  }
}

void check_isotropic(int d, double beta) {
  if (d < 2 || !(beta >= 0.0 && beta <= 1.0)) {
    std::ostringstream msg;
    msg << "isotropic parameters out of domain: d = " << d << ", beta = " << beta;
    throw DomainError(msg.str());
  }
}

void check_triple(const BlochTriple& r) {
  if (!r.is_valid()) {
    std::ostringstream msg;
    msg << "Bloch triple (" << r.r1 << ", " << r.r2 << ", " << r.r3 << ") is not a valid state";
    throw InvalidStateError(msg.str());
  }
}

// 1 − h((1 + c)/2) for a conditional Bloch-vector length c in [0, 1].
double one_minus_h_half(double c) { return 1.0 - binary_entropy((1.0 + std::min(c, 1.0)) / 2.0); }

// a log2(b) with the convention that the term vanishes when a = 0.
double alog2b(double a, double b) { return a == 0.0 ? 0.0 : a * std::log2(b); }

}  // namespace

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::C: return "C";
    case MeasureKind::C3: return "C3";
    case MeasureKind::Q2: return "Q2";
    case MeasureKind::C1: return "C1";
    case MeasureKind::D: return "D";
    case MeasureKind::Ef: return "Ef";
  }
  return "?";
}

std::optional<MeasureKind> parse_measure_kind(std::string_view name) {
  for (auto k : {MeasureKind::C, MeasureKind::C3, MeasureKind::Q2, MeasureKind::C1, MeasureKind::D, MeasureKind::Ef}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

double c_werner(int d, double alpha) {
  check_werner(d, alpha);
  const double dd = d;
  return std::log2(dd / (dd - alpha)) + alog2b((1.0 - alpha) / (dd - alpha), 1.0 - alpha);
}

double ef_werner(int d, double alpha) {
  check_werner(d, alpha);
  const double dd = d;
  const double c = std::max(0.0, (dd * alpha - 1.0) / (dd - alpha));
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

double c_isotropic(int d, double beta) {
  check_isotropic(d, beta);
  const double dd = d;
  const double w1 = (dd * beta + 1.0) / (dd + 1.0);
  const double w2 = (dd - dd * beta) / (dd + 1.0);
  return std::log2(dd) + alog2b(w1, w1) + alog2b(w2, (dd - dd * beta) / (dd * dd - 1.0));
}

double ef_isotropic(int d, double beta) {
  check_isotropic(d, beta);
  const double dd = d;
  if (beta <= 1.0 / dd) return 0.0;
  const double upper = 4.0 * (dd - 1.0) / (dd * dd);
  if (d == 2 || beta < upper) {
    const double s = std::sqrt(beta) + std::sqrt((dd - 1.0) * (1.0 - beta));
    const double gamma = std::min(1.0, s * s / dd);
    return binary_entropy(gamma) + (1.0 - gamma) * std::log2(dd - 1.0);
  }
  return (beta - 1.0) * dd * std::log2(dd - 1.0) / (dd - 2.0) + std::log2(dd);
}

double discord_isotropic(int d, double beta) {
  check_isotropic(d, beta);
  const double dd = d;
  const double value = alog2b(beta, beta) +
                       alog2b((1.0 - beta) / (dd + 1.0), (1.0 - beta) / (dd * dd - 1.0)) -
                       alog2b((1.0 + dd * beta) / (dd + 1.0), (1.0 - beta - 1.0 / dd + dd * beta) / (dd * dd - 1.0));
  return std::abs(value) < 1e-15 ? 0.0 : value;
}

double c_bell_diagonal(const BlochTriple& r) {
  check_triple(r);
  return one_minus_h_half(std::sqrt((r.r1 * r.r1 + r.r2 * r.r2) / 2.0));
}

double c_bell_diagonal_sorted(const BlochTriple& r) {
  check_triple(r);
  const auto m = r.sorted_magnitudes();
  return one_minus_h_half(std::sqrt((m[0] * m[0] + m[1] * m[1]) / 2.0));
}

double c3_bell_diagonal(const BlochTriple& r) {
  check_triple(r);
  const auto m = r.sorted_magnitudes();
  return one_minus_h_half(std::sqrt((m[1] * m[1] + m[2] * m[2]) / 2.0));
}

double q2_bell_diagonal(const BlochTriple& r) {
  check_triple(r);
  return one_minus_h_half(r.sorted_magnitudes()[1]);
}

double c1_bell_diagonal(const BlochTriple& r) {
  check_triple(r);
  return one_minus_h_half(r.sorted_magnitudes()[0]);
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2) throw DomainError("concurrence: two-qubit state required");
  const ComplexMatrix yy = tensor_product(pauli_y(), pauli_y());
  const ComplexMatrix flipped = yy * rho.matrix().conjugate() * yy;
  // eigenvalues of ρ ρ̃ equal those of the Hermitian √ρ ρ̃ √ρ
  const HermitianEigen e = eigh(rho.matrix());
  ComplexVector sqrt_vals(4);
  for (int k = 0; k < 4; ++k) sqrt_vals(k) = std::sqrt(std::max(0.0, e.values[static_cast<std::size_t>(k)]));
  const ComplexMatrix sqrt_rho = e.vectors * sqrt_vals.asDiagonal() * e.vectors.adjoint();
  const ComplexMatrix m = sqrt_rho * flipped * sqrt_rho;
  const auto ev = eigvals_hermitian(0.5 * (m + m.adjoint()));
  std::array<double, 4> lambda{};
  for (std::size_t k = 0; k < 4; ++k) lambda[k] = std::sqrt(std::max(0.0, ev[k]));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double ef_two_qubit(const DensityMatrix& rho) {
  const double c = std::min(1.0, concurrence(rho));
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

}  // namespace mubcorr
