#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mubcorr/linalg.hpp"
#include "mubcorr/states.hpp"

namespace mubcorr {

enum class MeasureKind { C, C3, Q2, C1, D, Ef };

std::string_view to_string(MeasureKind kind);
std::optional<MeasureKind> parse_measure_kind(std::string_view name);

// Werner family (I − αP)/(d(d − α)).
double c_werner(int d, double alpha);
double ef_werner(int d, double alpha);

// Isotropic family ((1 − β)I + (d²β − 1)P⁺)/(d² − 1).
double c_isotropic(int d, double beta);
double ef_isotropic(int d, double beta);
double discord_isotropic(int d, double beta);

// Bell-diagonal family (I⊗I + Σ r_j σ_j⊗σ_j)/4.

/// 1 − h((1 + √((r1² + r2²)/2))/2), first two components as written.
double c_bell_diagonal(const BlochTriple& r);
/// Same expression over the two largest magnitudes |r̄1|, |r̄2|.
double c_bell_diagonal_sorted(const BlochTriple& r);
/// 1 − h((1 + √((r̄2² + r̄3²)/2))/2).
double c3_bell_diagonal(const BlochTriple& r);
/// 1 − h((1 + |r̄2|)/2): χ-basis along the largest axis, best MU axis next.
double q2_bell_diagonal(const BlochTriple& r);
/// 1 − h((1 + |r̄1|)/2).
double c1_bell_diagonal(const BlochTriple& r);

/// Entanglement of formation of a two-qubit state from its concurrence.
double ef_two_qubit(const DensityMatrix& rho);
double concurrence(const DensityMatrix& rho);

}  // namespace mubcorr
