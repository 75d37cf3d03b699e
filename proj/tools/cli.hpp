#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <mubcorr/mubcorr.hpp>

namespace mubcorr::cli {

enum ExitCode : int { kOk = 0, kUsageError = 1, kNumericalFailure = 2 };

/// Entry point shared by the executable and the tests. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class Family { Werner, Isotropic, BellDiagonalRho1, BellDiagonalRho2 };
enum class SweepMode { ClosedForm, Numeric, Both };

std::optional<Family> parse_family(std::string_view name);
std::string_view to_string(Family family);
std::optional<SweepMode> parse_mode(std::string_view name);

struct SweepSpec {
  Family family = Family::Werner;
  int d = 2;
  double param_from = -1.0;
  double param_to = 1.0;
  int steps = 81;
  std::vector<MeasureKind> measures;
  SweepMode mode = SweepMode::Both;
};

/// Fills the grid defaults of a family: [-1, 1] with 81 points for Werner,
/// [0, 1] with 81 points for isotropic, [0, 1] with 101 points for the
/// two Bell-diagonal families.
SweepSpec default_sweep(Family family);

void validate(const SweepSpec& spec);

DensityMatrix family_state(Family family, int d, double param);

bool has_closed_form(Family family, MeasureKind kind);
bool has_numeric(Family family, int d, MeasureKind kind);

std::optional<double> closed_form_value(Family family, int d, double param, MeasureKind kind);
/// Throws NumericalError when no optimizer restart converged.
std::optional<double> numeric_value(Family family, int d, double param, MeasureKind kind, const OptimizerConfig& cfg);

/// Header plus one row per grid point, 9 significant digits. Grid point i
/// runs with optimizer seed mix_seed(cfg.seed, i).
std::string sweep_csv(const SweepSpec& spec, const OptimizerConfig& cfg);

std::string format_value(double v);

}  // namespace mubcorr::cli
