#include "susymod/cli.hpp"

#include "susymod/entanglement.hpp"
#include "susymod/linalg.hpp"
#include "susymod/modular.hpp"
#include "susymod/models.hpp"
#include "susymod/susy.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace susymod {

namespace {

const char* format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json:
      return "json";
    case OutputFormat::Csv:
      return "csv";
    case OutputFormat::Table:
      return "table";
  }
  return "json";
}

void require_square(const RunConfig& config, const std::string& what) {
  if (config.na_cut != config.nb_cut) {
    throw std::invalid_argument(what + " needs equal cutoffs (--na == --nb)");
  }
}

}  // namespace

void RunConfig::validate() const {
  if (na_cut < 2 || nb_cut < 2) throw std::invalid_argument("cutoffs must be >= 2");
  if (!(beta > 0.0)) throw std::invalid_argument("--beta must be > 0");
  if (!(omega > 0.0)) throw std::invalid_argument("--omega must be > 0");
  if (!(g > 0.0)) throw std::invalid_argument("--g must be > 0");
  if (!(omega_d > 0.0)) throw std::invalid_argument("--omega-d must be > 0");
  if (!(tolerance > 0.0)) throw std::invalid_argument("--tolerance must be > 0");
  if (margin < 1) throw std::invalid_argument("--margin must be >= 1");
  const int min_cut = std::min(na_cut, nb_cut);
  if (margin >= min_cut) {
    throw std::invalid_argument("--margin " + std::to_string(margin) +
                                " must be smaller than the cutoff " + std::to_string(min_cut));
  }
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["na_cut"] = na_cut;
  j["nb_cut"] = nb_cut;
  j["beta"] = beta;
  j["omega"] = omega;
  j["g"] = g;
  j["omega_d"] = omega_d;
  j["margin"] = margin;
  j["tolerance"] = tolerance;
  j["seed"] = seed;
  j["format"] = format_name(format);
  return j;
}

// ---------------------------------------------------------------------------
// verify

VerificationReport run_suite(const RunConfig& config, const std::string& suite) {
  static const std::vector<std::string> kSuites = {"superalgebra", "modular", "nonlinear-susy",
                                                   "jc-mapping"};
  if (suite != "all" && std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  config.validate();
  if (config.margin < 2) throw std::invalid_argument("verification needs --margin >= 2");
  if (suite == "all" || suite == "modular" || suite == "jc-mapping") require_square(config, suite);

  const FockSpec spec(config.na_cut, config.nb_cut);
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report(suite);
  const auto wants = [&](const std::string& name) { return suite == "all" || suite == name; };
  if (wants("superalgebra") || wants("modular")) {
    const SusySystem a = build_system(spec, Side::A);
    const SusySystem b = build_system(spec, Side::B);
    if (wants("superalgebra")) {
      report.merge(verify_superalgebra(a, b, config.margin, config.tolerance));
    }
    if (wants("modular")) {
      const ModularData data = make_modular_data(spec, config.beta);
      report.merge(verify_modular(data, a, b, config.margin, config.tolerance, config.seed));
    }
  }
  if (wants("nonlinear-susy")) {
    report.merge(verify_nonlinear_susy(spec, config.margin, config.tolerance, config.omega_d));
  }
  if (wants("jc-mapping")) {
    report.merge(verify_jc_mapping(spec, config.margin, config.tolerance, config.omega, config.g,
                                   config.omega_d));
  }

  const auto stop = std::chrono::steady_clock::now();
  report.set_config(config.to_json());
  report.set_wall_time_ms(std::chrono::duration<double, std::milli>(stop - start).count());
  return report;
}

int cmd_verify(const RunConfig& config, const std::string& suite, std::ostream& out,
               std::ostream& err) {
  VerificationReport report("");
  try {
    report = run_suite(config, suite);
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::domain_error& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }
  out << serialize(report, config.format);
  if (report.overall_pass()) return kExitOk;
  for (const auto& f : report.failures()) {
    err << "FAILED " << f.check_id << ": residual " << format_number(f.residual)
        << " > tolerance " << format_number(f.tolerance) << '\n';
  }
  return kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// spectrum

namespace {

struct SpectrumRow {
  int level;
  std::string label;
  double closed_form;
  double numeric;
};

// Greedy nearest match of each closed-form value against the unused numeric
// eigenvalues of the same block.
std::vector<double> match_eigenvalues(const std::vector<double>& expected,
                                      const Eigen::VectorXd& numeric) {
  std::vector<bool> used(static_cast<std::size_t>(numeric.size()), false);
  std::vector<double> out;
  for (double e : expected) {
    Eigen::Index best = -1;
    for (Eigen::Index i = 0; i < numeric.size(); ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      if (best < 0 || std::abs(numeric(i) - e) < std::abs(numeric(best) - e)) best = i;
    }
    if (best < 0) throw std::runtime_error("spectrum: ran out of numeric eigenvalues");
    used[static_cast<std::size_t>(best)] = true;
    out.push_back(numeric(best));
  }
  return out;
}

Eigen::VectorXd block_eigenvalues(const LinearOp& h, int margin, Spectator fixed) {
  const auto idx = spectator_block_indices(h.spec(), margin, fixed, 0);
  return hermitian_eigenvalues(restrict_to(h.matrix(), idx));
}

std::vector<SpectrumRow> spectrum_rows(const RunConfig& config, const std::string& model,
                                       int levels) {
  const FockSpec spec(config.na_cut, config.nb_cut);
  std::vector<SpectrumRow> rows;
  std::vector<double> expected;

  if (model == "landau-a" || model == "landau-b") {
    const Side side = model == "landau-a" ? Side::A : Side::B;
    for (const auto& entry : landau_spectrum(side, levels)) {
      for (const auto& label : entry.labels) {
        rows.push_back({static_cast<int>(entry.energy), to_string(label), entry.energy, 0.0});
        expected.push_back(entry.energy);
      }
    }
    const SusySystem sys = build_system(spec, side);
    const auto numeric = match_eigenvalues(
        expected, block_eigenvalues(sys.hamiltonian, config.margin,
                                    side == Side::A ? Spectator::M : Spectator::N));
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].numeric = numeric[i];
  } else if (model == "dirac") {
    const auto closed = dirac_spectrum(levels, config.omega_d);
    for (double e : closed) {
      const int n = static_cast<int>(std::lround((e / config.omega_d) * (e / config.omega_d)));
      rows.push_back({n, e < 0 ? "-sqrt(n)" : (e > 0 ? "+sqrt(n)" : "zero mode"), e, 0.0});
      expected.push_back(e);
    }
    const DiracModel d = dirac_hamiltonian(spec, Valley::Plus, Side::A, config.omega_d);
    const auto numeric =
        match_eigenvalues(expected, block_eigenvalues(d.hamiltonian, config.margin, Spectator::M));
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].numeric = numeric[i];
  } else if (model == "jc" || model == "ajc") {
    const JcVariant variant = model == "jc" ? JcVariant::JcB : JcVariant::AjcA;
    for (const auto& lvl : jc_susy_spectrum(variant, levels, config.omega, config.g)) {
      if (lvl.level == 0) {
        rows.push_back({0, "ground", lvl.e_plus, 0.0});
        expected.push_back(lvl.e_plus);
        continue;
      }
      rows.push_back({lvl.level, "E+", lvl.e_plus, 0.0});
      rows.push_back({lvl.level, "E-", lvl.e_minus, 0.0});
      expected.push_back(lvl.e_plus);
      expected.push_back(lvl.e_minus);
    }
    const JaynesCummingsModel m = jaynes_cummings(spec, variant, config.omega, config.g);
    const auto numeric = match_eigenvalues(
        expected, block_eigenvalues(m.hamiltonian, config.margin,
                                    variant == JcVariant::JcB ? Spectator::N : Spectator::M));
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].numeric = numeric[i];
  } else {
    throw std::invalid_argument("unknown model '" + model + "'");
  }
  return rows;
}

}  // namespace

int cmd_spectrum(const RunConfig& config, const std::string& model, int levels, std::ostream& out,
                 std::ostream& err) {
  std::vector<SpectrumRow> rows;
  try {
    config.validate();
    if (levels < 1) throw std::invalid_argument("--levels must be >= 1");
    const int interior = std::min(config.na_cut, config.nb_cut) - config.margin;
    if (levels >= interior) {
      throw std::invalid_argument("--levels " + std::to_string(levels) +
                                  " needs cutoff - margin > levels (interior size " +
                                  std::to_string(interior) + ")");
    }
    rows = spectrum_rows(config, model, levels);
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::domain_error& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  switch (config.format) {
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["model"] = model;
      j["levels"] = levels;
      j["config"] = config.to_json();
      j["rows"] = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        j["rows"].push_back({{"level", r.level},
                             {"label", r.label},
                             {"closed_form", r.closed_form},
                             {"numeric", r.numeric},
                             {"abs_diff", std::abs(r.closed_form - r.numeric)}});
      }
      out << dump_json(j) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "level,label,closed_form,numeric,abs_diff\n";
      for (const auto& r : rows) {
        out << r.level << ',' << csv_field(r.label) << ',' << format_number(r.closed_form) << ','
            << format_number(r.numeric) << ',' << format_number(std::abs(r.closed_form - r.numeric))
            << '\n';
      }
      break;
    case OutputFormat::Table:
      out << "model: " << model << '\n'
          << std::left << std::setw(7) << "level" << std::setw(18) << "label" << std::setw(22)
          << "closed form" << std::setw(22) << "numeric" << "abs diff\n";
      for (const auto& r : rows) {
        out << std::left << std::setw(7) << r.level << std::setw(18) << r.label << std::fixed
            << std::setprecision(12) << std::setw(22) << r.closed_form << std::setw(22)
            << r.numeric << std::scientific << std::setprecision(2)
            << std::abs(r.closed_form - r.numeric) << '\n';
      }
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// concurrence

int cmd_concurrence(const RunConfig& config, int k, double alpha_re, double alpha_im,
                    double beta_re, double beta_im, std::ostream& out, std::ostream& err) {
  constexpr double kCliNormTolerance = 1e-9;
  constexpr double kAgreementTolerance = 1e-10;
  Complex alpha(alpha_re, alpha_im);
  Complex beta(beta_re, beta_im);

  double c_modular = 0.0;
  double c_wootters = 0.0;
  try {
    config.validate();
    require_square(config, "concurrence");
    const double norm = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (std::abs(norm * norm - 1.0) > kCliNormTolerance) {
      throw std::invalid_argument("amplitudes are not normalized: |alpha|^2 + |beta|^2 = " +
                                  format_number(norm * norm));
    }
    alpha /= norm;
    beta /= norm;
    const FockSpec spec(config.na_cut, config.nb_cut);
    const SupermultipletState phi = supermultiplet_state(spec, k, alpha, beta);
    c_modular = concurrence_via_modular(modular_conjugation(spec), phi.state);
    c_wootters = concurrence_wootters(phi.state);
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::domain_error& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  const double formation = entanglement_of_formation(std::clamp(c_modular, 0.0, 1.0));
  const bool agreement = std::abs(c_modular - c_wootters) < kAgreementTolerance;

  switch (config.format) {
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["k"] = k;
      j["alpha"] = {alpha.real(), alpha.imag()};
      j["beta"] = {beta.real(), beta.imag()};
      j["concurrence_modular"] = c_modular;
      j["concurrence_wootters"] = c_wootters;
      j["formation_entropy"] = formation;
      j["agreement"] = agreement;
      out << dump_json(j) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "k,concurrence_modular,concurrence_wootters,formation_entropy,agreement\n"
          << k << ',' << format_number(c_modular) << ',' << format_number(c_wootters) << ','
          << format_number(formation) << ',' << (agreement ? "true" : "false") << '\n';
      break;
    case OutputFormat::Table:
      out << std::setprecision(15) << "k                     " << k << '\n'
          << "concurrence (J)       " << c_modular << '\n'
          << "concurrence (Wootters) " << c_wootters << '\n'
          << "formation entropy     " << formation << '\n'
          << "agreement             " << (agreement ? "yes" : "no") << '\n';
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// argument parsing

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Supersymmetric Landau levels, modular operators and concurrence"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  int nmax = 0;
  int na = 0;
  int nb = 0;
  std::string format = "json";
  app.add_option("--nmax", nmax, "Fock cutoff for both modes");
  app.add_option("--na", na, "Fock cutoff for mode a");
  app.add_option("--nb", nb, "Fock cutoff for mode b");
  app.add_option("--beta", config.beta, "Inverse temperature of Omega and Delta");
  app.add_option("--omega", config.omega, "Cavity / cyclotron frequency");
  app.add_option("--g", config.g, "Jaynes-Cummings coupling");
  app.add_option("--omega-d", config.omega_d, "Dirac frequency scale");
  app.add_option("--margin", config.margin, "Interior subspace margin");
  app.add_option("--tolerance", config.tolerance, "Default residual tolerance");
  app.add_option("--seed", config.seed, "Seed for random state sampling");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run identity verification suites");
  verify->add_option("--suite", suite, "superalgebra | modular | nonlinear-susy | jc-mapping | all");

  std::string model;
  int levels = 1;
  auto* spectrum = app.add_subcommand("spectrum", "Closed-form vs numeric spectra");
  spectrum->add_option("--model", model, "landau-a | landau-b | dirac | jc | ajc")->required();
  spectrum->add_option("--levels", levels, "Number of levels");

  int k = 1;
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  double beta_re = 0.0;
  double beta_im = 0.0;
  auto* concurrence = app.add_subcommand("concurrence", "Concurrence of a supermultiplet state");
  concurrence->add_option("--k", k, "Supermultiplet level");
  concurrence->add_option("--alpha-re", alpha_re);
  concurrence->add_option("--alpha-im", alpha_im);
  concurrence->add_option("--beta-re", beta_re);
  concurrence->add_option("--beta-im", beta_im);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  if (app.count("--nmax") > 0) config.na_cut = config.nb_cut = nmax;
  if (app.count("--na") > 0) config.na_cut = na;
  if (app.count("--nb") > 0) config.nb_cut = nb;
  config.format = parse_format(format);

  if (verify->parsed()) return cmd_verify(config, suite, out, err);
  if (spectrum->parsed()) return cmd_spectrum(config, model, levels, out, err);
  return cmd_concurrence(config, k, alpha_re, alpha_im, beta_re, beta_im, out, err);
}

}  // namespace susymod
