#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace mubcorr::cli {

namespace {

struct GlobalOptions {
  std::uint64_t seed = 0;
  int restarts = OptimizerConfig{}.restarts;
  int threads = 1;
  bool json = false;

  OptimizerConfig config() const {
    OptimizerConfig cfg;
    cfg.seed = seed;
    cfg.restarts = restarts;
    cfg.threads = threads;
    return cfg;
  }
};

std::vector<MeasureKind> parse_measures(const std::vector<std::string>& names) {
  std::vector<MeasureKind> kinds;
  for (const auto& n : names) {
    const auto k = parse_measure_kind(n);
    if (!k) throw DomainError("unknown measure '" + n + "' (expected C, C3, Q2, C1, D or Ef)");
    kinds.push_back(*k);
  }
  return kinds;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open " + path.string() + " for writing");
  out << text;
  out.close();
  if (!out) {
    std::error_code ec;
    std::filesystem::remove(path, ec);
    throw DomainError("failed writing " + path.string());
  }
}

// ---------------------------------------------------------------- measure

struct MeasureArgs {
  std::string state_file;
  std::string family;
  int d = 2;
  std::optional<double> alpha, beta, p;
  std::vector<double> r;
  std::vector<std::string> measures{"C"};
};

DensityMatrix measure_input_state(const MeasureArgs& a) {
  if (a.state_file.empty() == a.family.empty()) {
    throw DomainError("measure: give exactly one of --state FILE or --family NAME");
  }
  if (!a.state_file.empty()) return load_state(a.state_file);

  auto need = [&](const std::optional<double>& v, const char* flag) {
    if (!v) throw DomainError("measure: family " + a.family + " needs " + flag);
    return *v;
  };
  if (a.family == "werner") return werner_state(a.d, need(a.alpha, "--alpha"));
  if (a.family == "isotropic") return isotropic_state(a.d, need(a.beta, "--beta"));
  if (a.family == "bell-diagonal") {
    if (a.r.size() != 3) throw DomainError("measure: bell-diagonal needs --r r1,r2,r3");
    return bell_diagonal({a.r[0], a.r[1], a.r[2]});
  }
  if (a.family == "bell-diagonal-rho1") return fig3_rho1(need(a.p, "--p")).state;
  if (a.family == "bell-diagonal-rho2") return fig3_rho2(need(a.p, "--p")).state;
  throw DomainError("measure: unknown family '" + a.family + "'");
}

double measure_one(const DensityMatrix& rho, MeasureKind kind, const MeasureArgs& a, const OptimizerConfig& cfg) {
  auto checked = [&](const OptimizerResult& r) {
    if (r.restarts_converged == 0) {
      throw NumericalError("no optimizer restart converged for " + std::string(to_string(kind)));
    }
    return r.value;
  };
  switch (kind) {
    case MeasureKind::C: return checked(measure_C(rho, cfg));
    case MeasureKind::C3: return checked(measure_Cm(rho, 3, cfg));
    case MeasureKind::Q2: return checked(measure_Q2(rho, cfg));
    case MeasureKind::C1: return checked(classical_correlation_C1(rho, cfg));
    case MeasureKind::D: return quantum_discord(rho, cfg);
    case MeasureKind::Ef:
      if (rho.dim_a() == 2 && rho.dim_b() == 2) return ef_two_qubit(rho);
      if (a.family == "werner") return ef_werner(a.d, *a.alpha);
      if (a.family == "isotropic") return ef_isotropic(a.d, *a.beta);
      throw DomainError("measure: Ef needs a two-qubit state or the werner/isotropic family");
  }
  throw DomainError("measure: unsupported measure");
}

int cmd_measure(const MeasureArgs& a, const GlobalOptions& g, std::ostream& out) {
  const DensityMatrix rho = measure_input_state(a);
  const auto kinds = parse_measures(a.measures);
  const OptimizerConfig cfg = g.config();
  nlohmann::ordered_json doc;
  for (auto k : kinds) {
    const double v = measure_one(rho, k, a, cfg);
    if (g.json) {
      doc[std::string(to_string(k))] = v;
    } else {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.9f", v == 0.0 ? 0.0 : v);
      out << to_string(k) << '=' << buf << '\n';
    }
  }
  if (g.json) out << doc.dump(2) << '\n';
  return kOk;
}

// ------------------------------------------------------------------ sweep

struct SweepArgs {
  std::string family;
  int d = 2;
  std::optional<double> from, to;
  std::optional<int> steps;
  std::vector<std::string> measures;
  std::string mode = "both";
  std::string out;
};

int cmd_sweep(const SweepArgs& a, const GlobalOptions& g, std::ostream& out) {
  const auto family = parse_family(a.family);
  if (!family) throw DomainError("sweep: unknown family '" + a.family + "'");
  SweepSpec spec = default_sweep(*family);
  spec.d = a.d;
  if (a.from) spec.param_from = *a.from;
  if (a.to) spec.param_to = *a.to;
  if (a.steps) spec.steps = *a.steps;
  if (!a.measures.empty()) spec.measures = parse_measures(a.measures);
  const auto mode = parse_mode(a.mode);
  if (!mode) throw DomainError("sweep: unknown mode '" + a.mode + "' (closed-form, numeric, both)");
  spec.mode = *mode;

  const std::string csv = sweep_csv(spec, g.config());
  write_file(a.out, csv);
  if (!g.json) out << "wrote " << spec.steps << " rows to " << a.out << '\n';
  else out << nlohmann::json{{"rows", spec.steps}, {"out", a.out}}.dump() << '\n';
  return kOk;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  int samples = 0;
  int da = 2;
  int db = 2;
  std::string out = "verify_report.json";
};

int cmd_verify(const VerifyArgs& a, const GlobalOptions& g, std::ostream& out) {
  if (a.samples < 1) throw DomainError("verify: --samples must be >= 1");
  const VerificationReport report = verify_nullity_theorem(a.samples, a.da, a.db, g.seed, g.config());
  write_file(a.out, report_to_json(report) + "\n");
  if (g.json) {
    out << report_to_json(report) << '\n';
  } else {
    out << "samples=" << report.samples << " products_detected=" << report.products_detected
        << " witnesses_found=" << report.witnesses_found << " failures=" << report.failures.size()
        << " min_chi=" << format_value(report.min_chi_over_witnesses) << '\n';
  }
  return report.failures.empty() ? kOk : kNumericalFailure;
}

// ------------------------------------------------------------------- mubs

struct MubsArgs {
  int d = 0;
  std::string out;
};

int cmd_mubs(const MubsArgs& a, const GlobalOptions& g, std::ostream& out) {
  const MubSet set = wootters_fields_mubs(a.d);
  double worst = 0.0;
  for (std::size_t k = 0; k < set.size(); ++k) {
    for (std::size_t l = k + 1; l < set.size(); ++l) {
      worst = std::max(worst, unbiasedness_defect(set[k].columns(), set[l].columns()));
    }
  }
  const bool pass = worst <= 1e-10;
  if (!a.out.empty()) write_file(a.out, mub_set_to_json(set) + "\n");
  if (g.json) {
    out << mub_set_to_json(set) << '\n';
    return pass ? kOk : kNumericalFailure;
  }
  out << "d=" << set.dim() << " bases=" << set.size() << '\n';
  for (std::size_t k = 0; k < set.size(); ++k) {
    out << "basis " << k << ":\n";
    const ComplexMatrix& m = set[k].columns();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      out << " ";
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        char buf[64];
        std::snprintf(buf, sizeof buf, " %+.6f%+.6fi", m(i, j).real() + 0.0, m(i, j).imag() + 0.0);
        out << buf;
      }
      out << '\n';
    }
  }
  out << "max overlap defect " << format_value(worst) << '\n';
  out << "validation " << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kOk : kNumericalFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correlation measures from mutually unbiased bases"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--seed", g.seed, "Optimizer seed")->capture_default_str();
  app.add_option("--restarts", g.restarts, "Optimizer restarts")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "Worker threads for optimizer restarts")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "Machine-readable output");

  MeasureArgs ma;
  auto* measure = app.add_subcommand("measure", "Compute measures for one state");
  measure->add_option("--state", ma.state_file, "State JSON file");
  measure->add_option("--family", ma.family, "werner | isotropic | bell-diagonal | bell-diagonal-rho1 | bell-diagonal-rho2");
  measure->add_option("--d", ma.d, "Local dimension")->capture_default_str();
  measure->add_option("--alpha", ma.alpha, "Werner parameter");
  measure->add_option("--beta", ma.beta, "Isotropic parameter");
  measure->add_option("--p", ma.p, "Mixing parameter of the Bell-diagonal families");
  measure->add_option("--r", ma.r, "Bloch triple r1,r2,r3")->delimiter(',')->expected(3);
  measure->add_option("--measures", ma.measures, "Comma-separated: C, C3, Q2, C1, D, Ef")->delimiter(',');

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Sweep a family parameter and write CSV");
  sweep->add_option("--family", sa.family, "werner | isotropic | bell-diagonal-rho1 | bell-diagonal-rho2")->required();
  sweep->add_option("--d", sa.d, "Local dimension")->capture_default_str();
  sweep->add_option("--from", sa.from, "First parameter value");
  sweep->add_option("--to", sa.to, "Last parameter value");
  sweep->add_option("--steps", sa.steps, "Grid points");
  sweep->add_option("--measures", sa.measures, "Comma-separated measures (default C,D,Ef)")->delimiter(',');
  sweep->add_option("--mode", sa.mode, "closed-form | numeric | both")->capture_default_str();
  sweep->add_option("--out", sa.out, "Output CSV")->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check that every sampled non-product state has a witness pair");
  verify->add_option("--samples", va.samples, "Number of sampled states")->required();
  verify->add_option("--da", va.da, "Dimension of A")->capture_default_str();
  verify->add_option("--db", va.db, "Dimension of B")->capture_default_str();
  verify->add_option("--out", va.out, "Report JSON")->capture_default_str();

  MubsArgs ua;
  auto* mubs = app.add_subcommand("mubs", "Print and validate a full MUB set for prime d");
  mubs->add_option("--d", ua.d, "Prime dimension")->required();
  mubs->add_option("--out", ua.out, "Export JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*measure) return cmd_measure(ma, g, out);
    if (*sweep) return cmd_sweep(sa, g, out);
    if (*verify) return cmd_verify(va, g, out);
    if (*mubs) return cmd_mubs(ua, g, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"mubcorr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mubcorr::cli
