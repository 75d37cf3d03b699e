#include <cmath>
#include <cstdio>
#include <sstream>

#include "cli.hpp"

namespace mubcorr::cli {

namespace {

bool is_bell_family(Family f) { return f == Family::BellDiagonalRho1 || f == Family::BellDiagonalRho2; }

BellDiagonalState bell_family_state(Family f, double p) {
  return f == Family::BellDiagonalRho1 ? fig3_rho1(p) : fig3_rho2(p);
}

void require_converged(const OptimizerResult& r, MeasureKind kind) {
  if (r.restarts_converged == 0) {
    throw NumericalError("no optimizer restart converged for " + std::string(to_string(kind)));
  }
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  if (name == "werner") return Family::Werner;
  if (name == "isotropic") return Family::Isotropic;
  if (name == "bell-diagonal-rho1") return Family::BellDiagonalRho1;
  if (name == "bell-diagonal-rho2") return Family::BellDiagonalRho2;
  return std::nullopt;
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Werner: return "werner";
    case Family::Isotropic: return "isotropic";
    case Family::BellDiagonalRho1: return "bell-diagonal-rho1";
    case Family::BellDiagonalRho2: return "bell-diagonal-rho2";
  }
  return "?";
}

std::optional<SweepMode> parse_mode(std::string_view name) {
  if (name == "closed-form") return SweepMode::ClosedForm;
  if (name == "numeric") return SweepMode::Numeric;
  if (name == "both") return SweepMode::Both;
  return std::nullopt;
}

SweepSpec default_sweep(Family family) {
  SweepSpec s;
  s.family = family;
  s.measures = {MeasureKind::C, MeasureKind::D, MeasureKind::Ef};
  switch (family) {
    case Family::Werner:
      s.param_from = -1.0;
      s.param_to = 1.0;
      s.steps = 81;
      break;
    case Family::Isotropic:
      s.param_from = 0.0;
      s.param_to = 1.0;
      s.steps = 81;
      break;
    case Family::BellDiagonalRho1:
    case Family::BellDiagonalRho2:
      s.param_from = 0.0;
      s.param_to = 1.0;
      s.steps = 101;
      break;
  }
  return s;
}

DensityMatrix family_state(Family family, int d, double param) {
  switch (family) {
    case Family::Werner: return werner_state(d, param);
    case Family::Isotropic: return isotropic_state(d, param);
    case Family::BellDiagonalRho1:
    case Family::BellDiagonalRho2:
      if (d != 2) throw DomainError(std::string(to_string(family)) + " is a two-qubit family; use --d 2");
      return bell_family_state(family, param).state;
  }
  throw DomainError("unknown family");
}

bool has_closed_form(Family family, MeasureKind kind) {
  return !(family == Family::Werner && kind == MeasureKind::D);
}

bool has_numeric(Family family, int d, MeasureKind kind) {
  if (kind == MeasureKind::Ef) return d == 2;
  if (kind == MeasureKind::C3) return is_prime(d);
  (void)family;
  return true;
}

std::optional<double> closed_form_value(Family family, int d, double param, MeasureKind kind) {
  if (!has_closed_form(family, kind)) return std::nullopt;
  switch (family) {
    case Family::Werner:
      // χ does not depend on the measured basis, so every MUB-based quantity and C1 coincide
      return kind == MeasureKind::Ef ? ef_werner(d, param) : c_werner(d, param);
    case Family::Isotropic:
      if (kind == MeasureKind::Ef) return ef_isotropic(d, param);
      if (kind == MeasureKind::D) return discord_isotropic(d, param);
      return c_isotropic(d, param);
    case Family::BellDiagonalRho1:
    case Family::BellDiagonalRho2: {
      if (d != 2) throw DomainError(std::string(to_string(family)) + " is a two-qubit family; use --d 2");
      const BellDiagonalState s = bell_family_state(family, param);
      switch (kind) {
        case MeasureKind::C: return c_bell_diagonal_sorted(s.triple);
        case MeasureKind::C3: return c3_bell_diagonal(s.triple);
        case MeasureKind::Q2: return q2_bell_diagonal(s.triple);
        case MeasureKind::C1: return c1_bell_diagonal(s.triple);
        case MeasureKind::D: return mutual_information(s.state) - c1_bell_diagonal(s.triple);
        case MeasureKind::Ef: return ef_two_qubit(s.state);
      }
    }
  }
  return std::nullopt;
}

std::optional<double> numeric_value(Family family, int d, double param, MeasureKind kind, const OptimizerConfig& cfg) {
  if (!has_numeric(family, d, kind)) return std::nullopt;
  const DensityMatrix rho = family_state(family, d, param);
  switch (kind) {
    case MeasureKind::C: {
      const auto r = measure_C(rho, cfg);
      require_converged(r, kind);
      return r.value;
    }
    case MeasureKind::C3: {
      const auto r = measure_Cm(rho, 3, cfg);
      require_converged(r, kind);
      return r.value;
    }
    case MeasureKind::Q2: {
      const auto r = measure_Q2(rho, cfg);
      require_converged(r, kind);
      return r.value;
    }
    case MeasureKind::C1: {
      const auto r = classical_correlation_C1(rho, cfg);
      require_converged(r, kind);
      return r.value;
    }
    case MeasureKind::D: {
      OptimizerConfig dcfg = cfg;
      if (family == Family::Werner && d == 3) dcfg.restarts = std::min(dcfg.restarts, 8);
      return quantum_discord(rho, dcfg);
    }
    case MeasureKind::Ef: return ef_two_qubit(rho);
  }
  return std::nullopt;
}

void validate(const SweepSpec& spec) {
  if (spec.steps < 2) throw DomainError("sweep: steps must be >= 2");
  if (spec.measures.empty()) throw DomainError("sweep: no measures requested");
  if (spec.d < 2) throw DomainError("sweep: d must be >= 2");
  if (is_bell_family(spec.family) && spec.d != 2) throw DomainError("sweep: Bell-diagonal families need d = 2");
  const double lo = spec.family == Family::Werner ? -1.0 : 0.0;
  if (!(spec.param_from >= lo && spec.param_from <= 1.0 && spec.param_to >= lo && spec.param_to <= 1.0)) {
    std::ostringstream msg;
    msg << "sweep: parameter range [" << spec.param_from << ", " << spec.param_to << "] outside [" << lo << ", 1]";
    throw DomainError(msg.str());
  }
  for (auto k : spec.measures) {
    const bool cf = has_closed_form(spec.family, k);
    const bool num = has_numeric(spec.family, spec.d, k);
    if (!cf && !num) {
      throw DomainError("sweep: " + std::string(to_string(k)) + " is not available for this family and d");
    }
  }
}

std::string format_value(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string sweep_csv(const SweepSpec& spec, const OptimizerConfig& cfg) {
  validate(spec);
  cfg.validate();

  struct Column {
    MeasureKind kind;
    bool closed_form;  // which route fills it
    std::string name;
  };
  std::vector<Column> cols;
  for (auto k : spec.measures) {
    const std::string base(to_string(k));
    const bool cf = has_closed_form(spec.family, k);
    const bool num = has_numeric(spec.family, spec.d, k);
    switch (spec.mode) {
      case SweepMode::ClosedForm: cols.push_back({k, cf, base}); break;
      case SweepMode::Numeric: cols.push_back({k, !num, base}); break;
      case SweepMode::Both:
        if (cf) cols.push_back({k, true, base + "_cf"});
        if (num) cols.push_back({k, false, base + "_num"});
        break;
    }
  }

  std::ostringstream csv;
  csv << "param";
  for (const auto& c : cols) csv << ',' << c.name;
  csv << '\n';
  for (int i = 0; i < spec.steps; ++i) {
    const double x = i == spec.steps - 1
                         ? spec.param_to
                         : spec.param_from + (spec.param_to - spec.param_from) * i / (spec.steps - 1);
    OptimizerConfig point_cfg = cfg;
    point_cfg.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(i));
    csv << format_value(x);
    for (const auto& c : cols) {
      const auto v = c.closed_form ? closed_form_value(spec.family, spec.d, x, c.kind)
                                   : numeric_value(spec.family, spec.d, x, c.kind, point_cfg);
      csv << ',' << format_value(*v);
    }
    csv << '\n';
  }
  return csv.str();
}

}  // namespace mubcorr::cli
