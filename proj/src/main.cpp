#include <chrono>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "orbispec/io.hpp"
#include "orbispec/report.hpp"
#include "orbispec/scenarios.hpp"

namespace {

using namespace orbispec;

struct Options {
  std::vector<std::string> scenarios;
  std::string gamma = "Z";
  int cutoff_degree = 6;
  std::string cutoff_mu = "10";
  std::string format = "table";
  long long budget = 100000000;
  bool seed_check = false;
  bool physical = false;
  std::vector<double> times{1.0, 0.1, 0.01};
  std::string data_dir;
};

SpectrumOptions spectrum_options(const Options& o) {
  SpectrumOptions s;
  if (o.cutoff_degree < 0)
    throw std::invalid_argument("--cutoff-degree must be nonnegative");
  if (o.budget < 1) throw std::invalid_argument("--budget must be positive");
  s.cutoff_degree = o.cutoff_degree;
  s.cutoff_mu = parse_rational(o.cutoff_mu);
  if (s.cutoff_mu < 0) throw std::invalid_argument("--cutoff-mu must be nonnegative");
  s.physical = o.physical;
  s.budget = o.budget;
  return s;
}

Presentation parse_gamma(const Options& o) {
  Presentation p = Presentation::parse(o.gamma);
  if (p.name.empty()) p.name = o.gamma;
  return p;
}

// compare/sunada/certify accept one pair scenario or two single-orbifold ones
std::vector<Orbifold> gather_pair(const Options& o) {
  std::vector<Orbifold> out;
  for (const auto& s : o.scenarios) {
    Scenario sc = load_scenario(s, o.data_dir);
    for (auto& orb : sc.orbifolds) out.push_back(std::move(orb));
  }
  if (out.size() != 2)
    throw std::invalid_argument("expected a pair of orbifolds, got " +
                                std::to_string(out.size()));
  return out;
}

std::pair<std::string, int> run_sectors(const Options& o, bool with_spectrum) {
  Presentation gamma = parse_gamma(o);
  SpectrumOptions sopt = spectrum_options(o);
  if (!with_spectrum) {
    // counting only: shrink the spectral windows to the zero modes
    sopt.cutoff_degree = 0;
    sopt.cutoff_mu = 0;
  }
  Scenario sc = load_scenario(o.scenarios.at(0), o.data_dir);
  std::vector<GammaSpectrum> specs;
  bool degraded = false;
  for (const auto& orb : sc.orbifolds) {
    specs.push_back(gamma_spectrum(orb, gamma, sopt));
    degraded = degraded || !specs.back().all_supported;
  }
  ReportFormat fmt = parse_format(o.format);
  if (!with_spectrum) return {render_sectors(specs, fmt), 0};
  return {render_spectrum(specs, fmt), degraded ? 5 : 0};
}

std::pair<std::string, int> run_compare(const Options& o) {
  Presentation gamma = parse_gamma(o);
  SpectrumOptions sopt = spectrum_options(o);
  std::vector<Orbifold> pair = gather_pair(o);
  GammaSpectrum a = gamma_spectrum(pair[0], gamma, sopt);
  GammaSpectrum b = gamma_spectrum(pair[1], gamma, sopt);
  CompareResult r = compare_gamma_spectra(a, b);
  return {render_compare(a, b, r, parse_format(o.format)),
          r.inconclusive_unsupported ? 5 : 0};
}

std::pair<std::string, int> run_heat(const Options& o) {
  Presentation gamma = parse_gamma(o);
  SpectrumOptions sopt = spectrum_options(o);
  for (double t : o.times)
    if (!(t > 0)) throw std::invalid_argument("--t values must be positive");
  Scenario sc = load_scenario(o.scenarios.at(0), o.data_dir);
  std::vector<HeatReport> reports;
  bool degraded = false;
  for (const auto& orb : sc.orbifolds) {
    HeatReport rep;
    rep.spec = gamma_spectrum(orb, gamma, sopt);
    degraded = degraded || !rep.spec.all_supported;
    rep.expansion = leading_asymptotics(rep.spec);
    for (double t : o.times) rep.values.emplace_back(t, heat_trace(rep.spec, t));
    reports.push_back(std::move(rep));
  }
  return {render_heat(reports, parse_format(o.format)), degraded ? 5 : 0};
}

std::pair<std::string, int> run_sunada(const Options& o) {
  std::vector<Orbifold> pair = gather_pair(o);
  for (const auto& orb : pair)
    if (orb.kind != OrbifoldKind::Orthogonal || !orb.action)
      throw UnsupportedSector(
          "almost-conjugacy comparison needs orthogonal-action orbifolds");
  AlmostConjugacyWitness w = almost_conjugacy_witness(
      pair[0].action->group.elements(), pair[1].action->group.elements());
  return {render_witness(pair[0].name, pair[1].name, w, parse_format(o.format)), 0};
}

std::pair<std::string, int> run_certify(const Options& o) {
  Presentation gamma = parse_gamma(o);
  std::vector<Orbifold> pair = gather_pair(o);
  GammaCertificate cert =
      certify_gamma_isospectral(pair[0], pair[1], gamma, o.budget);
  return {render_certificate(pair[0].name, pair[1].name, gamma.name, cert,
                             parse_format(o.format)),
          0};
}

std::pair<std::string, int> run_command(const std::string& cmd, const Options& o) {
  if (cmd == "sectors") return run_sectors(o, false);
  if (cmd == "spectrum") return run_sectors(o, true);
  if (cmd == "compare") return run_compare(o);
  if (cmd == "heat") return run_heat(o);
  if (cmd == "sunada") return run_sunada(o);
  return run_certify(o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Gamma-sector decompositions and Gamma-spectra of quotient orbifolds"};
  app.require_subcommand(1);
  Options o;
  const char* env_data = std::getenv("ORBISPEC_DATA");
  o.data_dir = env_data ? env_data : "data";

  auto add_common = [&o](CLI::App* sub, int max_scen, bool with_gamma) {
    sub->add_option("scenario", o.scenarios,
                    "scenario spec, e.g. rsw29 or lens:8:1,3")
        ->required()
        ->expected(1, max_scen);
    if (with_gamma)
      sub->add_option("--gamma", o.gamma,
                      "Z, Z^<l>, F<l>, Zp:<p> or file:<presentation.json>");
    sub->add_option("--cutoff-degree", o.cutoff_degree,
                    "harmonic degree bound for sphere spectra");
    sub->add_option("--cutoff-mu", o.cutoff_mu,
                    "dual-norm bound for flat spectra (rational)");
    sub->add_option("--format", o.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--budget", o.budget, "enumeration budget");
    sub->add_option("--data-dir", o.data_dir,
                    "directory searched for scenario files (default: $ORBISPEC_DATA or ./data)");
    sub->add_flag("--physical", o.physical,
                  "flat eigenvalues as 4 pi^2 mu instead of the dual norm mu");
    sub->add_flag("--seed-check", o.seed_check,
                  "evaluate twice and require byte-identical reports");
  };

  add_common(app.add_subcommand("sectors", "Gamma-sector decomposition table"), 1, true);
  add_common(app.add_subcommand("spectrum", "Gamma-spectrum with sector rows"), 1, true);
  add_common(app.add_subcommand("compare", "isospectrality verdict for a pair"), 2, true);
  add_common(app.add_subcommand("heat", "heat trace and leading asymptotics"), 1, true);
  add_common(app.add_subcommand("sunada", "almost-conjugacy witness for the acting groups"),
             2, false);
  add_common(app.add_subcommand("certify", "Sunada-style sector-matching certificate"),
             2, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  auto started = std::chrono::steady_clock::now();
  try {
    auto [text, rc] = run_command(cmd, o);
    if (o.seed_check) {
      auto [text2, rc2] = run_command(cmd, o);
      if (text2 != text || rc2 != rc)
        throw std::logic_error("seed-check: report changed between evaluations");
      std::cerr << "seed-check: ok\n";
    }
    std::cout << text;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    std::cerr << "elapsed_ms=" << ms << "\n";
    return rc;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const UnsupportedSector& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 5;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 4;
  }
}
