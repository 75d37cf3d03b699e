#include "mubcorr/mub.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace mubcorr {

namespace {

Complex root_of_unity(int d, long long power) {
  const long long reduced = ((power % d) + d) % d;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(reduced) / d);
}

void require_dim(int d, const char* what) {
  if (d < 2) {
    std::ostringstream msg;
    msg << what << ": dimension must be >= 2, got " << d;
    throw DomainError(msg.str());
  }
}

}  // namespace

Basis::Basis(ComplexMatrix columns, double tol) : columns_(std::move(columns)) {
  if (columns_.rows() < 1 || columns_.rows() != columns_.cols()) {
    throw DomainError("basis matrix must be square and non-empty");
  }
  if (!is_unitary(columns_, tol)) {
    throw DomainError("basis matrix is not unitary");
  }
}

MubSet::MubSet(int dim, std::vector<Basis> bases, double tol) : dim_(dim), bases_(std::move(bases)) {
  for (const auto& b : bases_) {
    if (b.dim() != dim_) throw DomainError("MubSet: basis dimension mismatch");
  }
  for (std::size_t k = 0; k < bases_.size(); ++k) {
    for (std::size_t l = k + 1; l < bases_.size(); ++l) {
      if (!is_mutually_unbiased(bases_[k], bases_[l], tol)) {
        std::ostringstream msg;
        msg << "MubSet: bases " << k << " and " << l << " are not mutually unbiased";
        throw DomainError(msg.str());
      }
    }
  }
}

Basis computational_basis(int d) {
  require_dim(d, "computational_basis");
  return Basis(ComplexMatrix::Identity(d, d));
}

Basis fourier_basis(int d) {
  require_dim(d, "fourier_basis");
  ComplexMatrix f(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) f(j, k) = norm * root_of_unity(d, static_cast<long long>(j) * k);
  }
  return Basis(std::move(f));
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

MubSet wootters_fields_mubs(int d) {
  if (d < 2 || d > 13 || !is_prime(d)) {
    std::ostringstream msg;
    msg << "full MUB sets are constructed for prime d in [2, 13] only; got d = " << d;
    if (d >= 2 && !is_prime(d)) msg << " (not prime)";
    throw DomainError(msg.str());
  }
  std::vector<Basis> bases;
  bases.push_back(computational_basis(d));
  if (d == 2) {
    bases.push_back(fourier_basis(2));
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix y(2, 2);
    y << s, s, Complex(0.0, s), Complex(0.0, -s);
    bases.emplace_back(std::move(y));
    return MubSet(d, std::move(bases));
  }
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int r = 0; r < d; ++r) {
    ComplexMatrix b(d, d);
    for (int k = 0; k < d; ++k) {
      for (int j = 0; j < d; ++j) {
        const long long jj = j;
        b(j, k) = norm * root_of_unity(d, r * jj * jj + k * jj);
      }
    }
    bases.emplace_back(std::move(b));
  }
  return MubSet(d, std::move(bases));
}

double unbiasedness_defect(const ComplexMatrix& b1, const ComplexMatrix& b2) {
  const double target = 1.0 / std::sqrt(static_cast<double>(b1.rows()));
  const ComplexMatrix overlaps = b1.adjoint() * b2;
  return (overlaps.cwiseAbs().array() - target).abs().maxCoeff();
}

bool is_mutually_unbiased(const Basis& b1, const Basis& b2, double tol) {
  if (b1.dim() != b2.dim()) throw DomainError("is_mutually_unbiased: dimension mismatch");
  return unbiasedness_defect(b1.columns(), b2.columns()) <= tol;
}

MubSet rotate_mub_set(const ComplexMatrix& u, const MubSet& set) {
  if (u.rows() != set.dim() || u.cols() != set.dim()) {
    throw DomainError("rotate_mub_set: dimension mismatch");
  }
  if (!is_unitary(u, 1e-8)) throw DomainError("rotate_mub_set: matrix is not unitary");
  std::vector<Basis> rotated;
  rotated.reserve(set.size());
  for (const auto& b : set.bases()) rotated.emplace_back(u * b.columns(), 1e-8);
  return MubSet(set.dim(), std::move(rotated), 1e-8);
}

std::string mub_set_to_json(const MubSet& set) {
  nlohmann::json bases = nlohmann::json::array();
  for (const auto& b : set.bases()) {
    nlohmann::json cols = nlohmann::json::array();
    for (int k = 0; k < b.dim(); ++k) {
      nlohmann::json col = nlohmann::json::array();
      for (int j = 0; j < b.dim(); ++j) col.push_back({b.columns()(j, k).real(), b.columns()(j, k).imag()});
      cols.push_back(std::move(col));
    }
    bases.push_back(std::move(cols));
  }
  nlohmann::json doc = {{"dim", set.dim()}, {"bases", std::move(bases)}};
  return doc.dump(2);
}

MubSet mub_set_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    const int d = doc.at("dim").get<int>();
    if (d < 1) throw DomainError("MubSet JSON: dim must be positive");
    std::vector<Basis> bases;
    for (const auto& jb : doc.at("bases")) {
      if (jb.size() != static_cast<std::size_t>(d)) throw DomainError("MubSet JSON: wrong column count");
      ComplexMatrix m(d, d);
      for (int k = 0; k < d; ++k) {
        const auto& col = jb.at(k);
        if (col.size() != static_cast<std::size_t>(d)) throw DomainError("MubSet JSON: wrong column length");
        for (int j = 0; j < d; ++j) m(j, k) = Complex(col.at(j).at(0).get<double>(), col.at(j).at(1).get<double>());
      }
      bases.emplace_back(std::move(m));
    }
    return MubSet(d, std::move(bases));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("MubSet JSON: ") + e.what());
  }
}

}  // namespace mubcorr
