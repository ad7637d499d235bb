// Command-line front end.  Subcommands map one-to-one onto the library
// reports; identical inputs produce byte-identical outputs.
//
// Exit codes: 0 success, 1 computation failure (diagnostic names the failed
// invariant or quadrature), 2 argument error with usage text.

#include <CLI11.hpp>

#include <algorithm>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "zonal/box_operator.hpp"
#include "zonal/coulomb.hpp"
#include "zonal/io.hpp"
#include "zonal/kernels.hpp"
#include "zonal/lamb.hpp"
#include "zonal/model.hpp"
#include "zonal/numerics.hpp"
#include "zonal/zones.hpp"

namespace {

using zonal::io::CsvWriter;
using zonal::io::fmt;
using zonal::io::Json;

struct CommonOpts {
  std::string lambda = "1";
  int kappa = 1;
  double q = 1.0;
  double tol = 1e-8;
  bool field_term = true;
  std::string format = "csv";
  std::string output;
};

const CLI::Validator kRationalPositive(
    [](std::string& s) -> std::string {
      try {
        if (zonal::rational_from_string(s) <= 0) return "must be a positive rational: " + s;
      } catch (const std::exception&) {
        return "not a rational: " + s;
      }
      return {};
    },
    "RATIONAL>0");

// Flat key=value config support with the precedence command line > config
// file > defaults: file entries are injected as extra tokens for every key
// the command line does not already carry.
std::vector<std::string> apply_config_layer(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config_path;
  for (size_t i = 0; i < args.size();) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ValidationError("--config", "missing file path");
      config_path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  if (config_path.empty()) return args;

  std::ifstream file(config_path);
  if (!file) throw CLI::ValidationError("--config", "cannot open '" + config_path + "'");
  std::string line;
  while (std::getline(file, line)) {
    const auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--config", "expected key=value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw CLI::ValidationError("--config", "empty key in '" + line + "'");
    const std::string flag = "--" + key;
    bool on_command_line = false;
    for (const std::string& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) {
        on_command_line = true;
        break;
      }
    if (!on_command_line) {
      args.push_back(flag);
      if (!value.empty()) args.push_back(value);
    }
  }
  return args;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  static std::string config_doc_only;
  cmd->add_option("--config", config_doc_only,
                  "flat key=value configuration file (command-line flags take precedence)");
  cmd->add_option("--lambda", opts.lambda, "spectral parameter, a rational like 1 or 1/2")
      ->check(kRationalPositive);
  cmd->add_option("--kappa", opts.kappa, "particle count kappa = k/2")->check(CLI::PositiveNumber);
  cmd->add_option("--Q", opts.q, "Coulomb strength");
  cmd->add_option("--tol", opts.tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  cmd->add_flag("--field-term,!--no-field-term", opts.field_term,
                "include the constant magnetic energy-density term");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output,-o", opts.output, "write the report to this file instead of stdout");
}

zonal::ModelParams make_params(const CommonOpts& opts) {
  zonal::ModelParams params;
  params.lambda = zonal::rational_from_string(opts.lambda);
  params.kappa = opts.kappa;
  params.coulomb_strength = opts.q;
  params.include_field_term = opts.field_term;
  params.validate();
  return params;
}

void emit(const CommonOpts& opts, const std::string& report) {
  if (opts.output.empty()) {
    std::fputs(report.c_str(), stdout);
  } else {
    zonal::io::write_file(opts.output, report);
  }
}

std::string run_spectrum(const CommonOpts& opts, int zone, int p_max) {
  zonal::ModelParams params = make_params(opts);
  std::vector<zonal::SpectralLine> lines = zonal::enumerate_zone_spectrum(zone, params, p_max);
  if (opts.format == "json") {
    Json j;
    j["zone"] = zone;
    j["kappa"] = params.kappa;
    j["lambda"] = zonal::to_string(params.lambda);
    Json arr = Json::array();
    for (const auto& line : lines)
      arr.push_back({{"p", line.p}, {"energy", line.energy}, {"multiplicity", line.multiplicity}});
    j["lines"] = arr;
    return j.dump(2) + "\n";
  }
  CsvWriter csv({"p", "energy", "multiplicity"});
  for (const auto& line : lines)
    csv.row({std::to_string(line.p), fmt(line.energy), std::to_string(line.multiplicity)});
  return csv.str();
}

std::string run_verify_eigen(const CommonOpts& opts, int max_degree,
                             const std::string& orientation, bool* ok) {
  zonal::ModelParams params = make_params(opts);
  params.kappa = 1;  // the exact operator is the 2D one
  params.orientation =
      orientation == "minus" ? zonal::Orientation::Minus : zonal::Orientation::Plus;
  int checked = 0;
  int failures = 0;
  Json states = Json::array();
  for (int p = 0; p <= max_degree; ++p) {
    for (int q = 0; p + q <= max_degree; ++q) {
      zonal::EigenState st = zonal::make_eigen_state(p, q, params);
      zonal::ExactPoly conj_path = zonal::apply_box_conjugated(st.poly, params);
      zonal::ExactPoly oracle_path = zonal::apply_box_oracle(st.poly, params);
      const bool match =
          conj_path == oracle_path && conj_path == st.eigenvalue * st.poly;
      ++checked;
      if (!match) ++failures;
      if (opts.format == "json") {
        Json e = zonal::io::eigen_state_to_json(st);
        e["eigen_relation_exact"] = match;
        states.push_back(e);
      }
    }
  }
  *ok = failures == 0;
  std::string summary = "checked " + std::to_string(checked) + " eigen-relations, " +
                        std::to_string(failures) + " failures\n";
  if (opts.format == "json") {
    Json j;
    j["lambda"] = zonal::to_string(params.lambda);
    j["max_degree"] = max_degree;
    j["checked"] = checked;
    j["failures"] = failures;
    j["states"] = states;
    return j.dump(2) + "\n";
  }
  return summary;
}

std::string run_kernels(const CommonOpts& opts, const std::string& kind, int zone, double t,
                        int grid, double extent, double w_re, double w_im) {
  zonal::ModelParams params = make_params(opts);
  const zonal::Complex w{w_re, w_im};
  CsvWriter csv({"re_z", "im_z", "re_w", "im_w", "t", "re_value", "im_value"});
  for (int ix = 0; ix < grid; ++ix) {
    for (int iy = 0; iy < grid; ++iy) {
      const double x = grid == 1 ? 0.0 : -extent + 2.0 * extent * ix / (grid - 1);
      const double y = grid == 1 ? 0.0 : -extent + 2.0 * extent * iy / (grid - 1);
      const zonal::Complex z{x, y};
      zonal::Complex v;
      double t_out = t;
      if (kind == "point") {
        v = zonal::point_spread(zone, params, z, w).value;
        t_out = 0.0;
      } else if (kind == "wiener-global") {
        v = zonal::wiener_global(t, params, z, w).value;
      } else if (kind == "schrodinger-global") {
        v = zonal::schrodinger_global(t, params, z, w).value;
      } else if (kind == "wiener-zonal") {
        v = zonal::wiener_zonal(zone, t, params, z, w).value;
      } else {
        v = zonal::schrodinger_zonal(zone, t, params, z, w).value;
      }
      csv.row({fmt(x), fmt(y), fmt(w_re), fmt(w_im), fmt(t_out), fmt(v.real()), fmt(v.imag())});
    }
  }
  return csv.str();
}

std::string run_partition(const CommonOpts& opts, int zone, const std::string& kind, double t_min,
                          double t_max, int steps) {
  zonal::ModelParams params = make_params(opts);
  const zonal::FlowKind fk =
      kind == "wiener" ? zonal::FlowKind::Wiener : zonal::FlowKind::Schrodinger;
  CsvWriter csv({"zone", "kind", "t", "re_value", "im_value"});
  for (int i = 0; i < steps; ++i) {
    const double t = steps == 1 ? t_min : t_min + (t_max - t_min) * i / (steps - 1);
    const zonal::Complex v = zonal::partition_zonal(zone, t, params, fk);
    csv.row({std::to_string(zone), kind, fmt(t), fmt(v.real()), fmt(v.imag())});
  }
  return csv.str();
}

std::string run_coulomb_matrix(const CommonOpts& opts, int zone_a, int zone_b, int m_min,
                               int m_max, const std::string& potential) {
  zonal::ModelParams params = make_params(opts);
  params.kappa = 1;
  const zonal::Potential pot =
      potential == "log2d" ? zonal::Potential::Log2D : zonal::Potential::Coulomb3D;
  zonal::ZoneOperatorMatrix mat =
      zonal::transmission_matrix(zone_a, zone_b, m_min, m_max, params, pot, opts.tol);
  CsvWriter csv({"a", "b", "m", "re", "im", "abs_err"});
  for (const auto& [m, entry] : mat.entries) {
    csv.row({std::to_string(mat.a), std::to_string(mat.b), std::to_string(m),
             fmt(entry.value.real()), fmt(entry.value.imag()), fmt(entry.abs_err)});
  }
  return csv.str();
}

std::string run_coulomb_divergence(const CommonOpts& opts, long m_max, double epsilon) {
  zonal::ModelParams params = make_params(opts);
  params.kappa = 1;
  zonal::TraceDivergenceReport rep = zonal::trace_divergence_report(0, m_max, epsilon, params);
  Json j;
  j["m_max"] = rep.m_max;
  j["epsilon"] = rep.epsilon;
  j["sum_E"] = rep.sum_E;
  j["sum_E2"] = rep.sum_E2;
  j["sum_E2eps"] = rep.sum_E2eps;
  j["stirling_ratio"] = rep.stirling_ratio;
  j["sum_model_ratio"] = rep.sum_model_ratio;
  j["e2_window"] = rep.e2_window;
  j["tail_increment"] = rep.tail_increment;
  Json cps = Json::array();
  for (const auto& cp : rep.checkpoints)
    cps.push_back({{"m", cp.m}, {"sum_E", cp.sum_E}, {"sum_E2", cp.sum_E2},
                   {"sum_E2eps", cp.sum_E2eps}});
  j["checkpoints"] = cps;
  return j.dump(2) + "\n";
}

std::string run_coulomb_log2d(int m_max) {
  std::vector<zonal::LogPotentialEntry> entries = zonal::log_potential_diag(m_max);
  CsvWriter csv({"m", "quadrature", "closed_form"});
  for (const auto& e : entries)
    csv.row({std::to_string(e.m), fmt(e.quadrature), fmt(e.closed_form)});
  return csv.str();
}

std::string run_lamb(const CommonOpts& opts, int l_min, int l_max, const std::string& mode,
                     const std::string& density) {
  using namespace zonal::lamb;
  const DensityKind dk = density == "exact_gamma" ? DensityKind::ExactGamma : DensityKind::Stirling;
  CsvWriter csv({"l", "mode", "density", "re_sigma", "im_sigma", "delta_eV", "delta_MHz",
                 "abs_err"});
  for (int l = l_min; l <= l_max; ++l) {
    AmplitudeResult sp = sigma_p(l, dk, opts.tol);
    if (mode == "epsilon_p" || mode == "both") {
      LambShift shift = lamb_shift(l, ShiftMode::EpsilonP);
      csv.row({std::to_string(l), "epsilon_p", density, fmt(sp.sigma.real()),
               fmt(sp.sigma.imag()), fmt(shift.energy_eV), fmt(shift.frequency_MHz),
               fmt(sp.abs_err)});
    }
    if (mode == "total" || mode == "both") {
      AmplitudeResult sb = sigma_B(dk, opts.tol);
      const std::complex<double> total = sp.sigma + sb.sigma;
      LambShift shift = lamb_shift(l, ShiftMode::Total);
      csv.row({std::to_string(l), "total", density, fmt(total.real()), fmt(total.imag()),
               fmt(shift.energy_eV), fmt(shift.frequency_MHz), fmt(sp.abs_err + sb.abs_err)});
    }
  }
  return csv.str();
}

std::string run_constants() {
  const zonal::lamb::PhysicalConstants& c = zonal::lamb::default_constants();
  const zonal::lamb::PaperPrintedConstants printed;
  Json j;
  j["alpha"] = c.alpha;
  j["c_m_per_s"] = c.c;
  j["me_kg"] = c.me_kg;
  j["e_charge_C"] = c.e_charge;
  j["h_Js"] = c.h;
  j["hbar_Js"] = c.hbar;
  j["mu_bohr_J_per_T"] = c.mu_bohr;
  j["me_c2_J"] = c.me_c2_J();
  j["me_c2_eV"] = c.me_c2_eV();
  j["aleph"] = c.aleph();
  j["hbar2_over_2me"] = c.hbar2_over_2me();
  j["two_lambda_phys"] = c.two_lambda_phys();
  j["W_extra"] = c.w_extra();
  j["printed"] = {{"alpha", printed.alpha},
                  {"mu_bohr_J_per_T", printed.mu_bohr},
                  {"hbar2_over_2me", printed.hbar2_over_2me},
                  {"W_extra", printed.w_extra},
                  {"two_lambda_phys", printed.two_lambda_phys}};
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zonal spectral analysis of the Landau-Zeeman operator"};
  app.require_subcommand(1);

  CommonOpts opts;

  // spectrum
  int zone = 0, p_max = 10;
  CLI::App* spectrum = app.add_subcommand("spectrum", "zone spectrum with multiplicities");
  add_common(spectrum, opts);
  spectrum->add_option("--zone", zone)->check(CLI::NonNegativeNumber);
  spectrum->add_option("--p-max", p_max)->check(CLI::NonNegativeNumber);

  // verify-eigen
  int max_degree = 8;
  std::string orientation = "plus";
  CLI::App* verify = app.add_subcommand("verify-eigen", "exact eigen-relation check");
  add_common(verify, opts);
  verify->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);
  verify->add_option("--orientation", orientation, "sign of the angular-momentum term")
      ->check(CLI::IsMember({"plus", "minus"}));

  // kernels
  std::string kernel_kind = "point";
  double kt = 1.0, extent = 1.5, w_re = 0.0, w_im = 0.0;
  int grid = 5;
  CLI::App* kernels = app.add_subcommand("kernels", "kernel grid dump");
  add_common(kernels, opts);
  kernels->add_option("--kind", kernel_kind)
      ->check(CLI::IsMember({"point", "wiener-global", "schrodinger-global", "wiener-zonal",
                             "schrodinger-zonal"}));
  kernels->add_option("--zone", zone)->check(CLI::NonNegativeNumber);
  kernels->add_option("--t", kt);
  kernels->add_option("--grid", grid)->check(CLI::PositiveNumber);
  kernels->add_option("--extent", extent)->check(CLI::PositiveNumber);
  kernels->add_option("--w-re", w_re);
  kernels->add_option("--w-im", w_im);

  // partition
  std::string flow_kind = "wiener";
  double t_min = 0.1, t_max = 5.0;
  int steps = 25;
  CLI::App* partition = app.add_subcommand("partition", "zonal partition function over t");
  add_common(partition, opts);
  partition->add_option("--zone", zone)->check(CLI::NonNegativeNumber);
  partition->add_option("--kind", flow_kind)->check(CLI::IsMember({"wiener", "schrodinger"}));
  partition->add_option("--t-min", t_min)->check(CLI::PositiveNumber);
  partition->add_option("--t-max", t_max)->check(CLI::PositiveNumber);
  partition->add_option("--steps", steps)->check(CLI::PositiveNumber);

  // coulomb
  std::string report = "matrix", potential = "coulomb3d";
  int zone_a = 0, zone_b = 0, m_min = 0, m_max = 10;
  long div_m_max = 100000;
  double epsilon = 0.1;
  CLI::App* coulomb = app.add_subcommand("coulomb", "zonal Coulomb operators and diagnostics");
  add_common(coulomb, opts);
  coulomb->add_option("--report", report)->check(CLI::IsMember({"matrix", "divergence", "log2d"}));
  coulomb->add_option("--zone-a", zone_a)->check(CLI::NonNegativeNumber);
  coulomb->add_option("--zone-b", zone_b)->check(CLI::NonNegativeNumber);
  coulomb->add_option("--m-min", m_min);
  coulomb->add_option("--m-max", m_max);
  coulomb->add_option("--potential", potential)->check(CLI::IsMember({"coulomb3d", "log2d"}));
  coulomb->add_option("--div-m-max", div_m_max)->check(CLI::PositiveNumber);
  coulomb->add_option("--epsilon", epsilon)->check(CLI::PositiveNumber);

  // lamb
  int l_max = 5, single_l = -1;
  std::string mode = "both", density = "stirling";
  bool constants_only = false;
  CLI::App* lamb_cmd = app.add_subcommand("lamb", "amplitude integrals and the level shift");
  add_common(lamb_cmd, opts);
  lamb_cmd->add_option("--l-max", l_max)->check(CLI::NonNegativeNumber);
  lamb_cmd->add_option("--l", single_l, "a single l instead of the 0..l-max table")
      ->check(CLI::NonNegativeNumber);
  lamb_cmd->add_option("--mode", mode)->check(CLI::IsMember({"epsilon_p", "total", "both"}));
  lamb_cmd->add_option("--density", density)->check(CLI::IsMember({"stirling", "exact_gamma"}));
  lamb_cmd->add_flag("--constants", constants_only, "dump the physical constants as JSON");

  // report-all
  std::string out_dir = "reports";
  CLI::App* report_all = app.add_subcommand("report-all", "write every default report");
  add_common(report_all, opts);
  report_all->add_option("--output-dir", out_dir);

  try {
    std::vector<std::string> args = apply_config_layer(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    std::cerr << app.help() << "\n";
    return 2;
  }

  try {
    if (*spectrum) {
      emit(opts, run_spectrum(opts, zone, p_max));
    } else if (*verify) {
      bool ok = true;
      emit(opts, run_verify_eigen(opts, max_degree, orientation, &ok));
      if (!ok) {
        std::cerr << "verify-eigen: exact eigen-relation failed\n";
        return 1;
      }
    } else if (*kernels) {
      emit(opts, run_kernels(opts, kernel_kind, zone, kt, grid, extent, w_re, w_im));
    } else if (*partition) {
      emit(opts, run_partition(opts, zone, flow_kind, t_min, t_max, steps));
    } else if (*coulomb) {
      if (report == "matrix")
        emit(opts, run_coulomb_matrix(opts, zone_a, zone_b, m_min, m_max, potential));
      else if (report == "divergence")
        emit(opts, run_coulomb_divergence(opts, div_m_max, epsilon));
      else
        emit(opts, run_coulomb_log2d(m_max));
    } else if (*lamb_cmd) {
      if (constants_only) {
        emit(opts, run_constants());
      } else {
        const int lo = single_l >= 0 ? single_l : 0;
        const int hi = single_l >= 0 ? single_l : l_max;
        emit(opts, run_lamb(opts, lo, hi, mode, density));
      }
    } else if (*report_all) {
      auto write = [&](const std::string& name, const std::string& content) {
        zonal::io::write_file(out_dir + "/" + name, content);
      };
      write("spectrum.csv", run_spectrum(opts, 0, 10));
      bool ok = true;
      CommonOpts json_opts = opts;
      json_opts.format = "json";
      write("eigen.json", run_verify_eigen(json_opts, 6, "plus", &ok));
      write("kernels.csv", run_kernels(opts, "point", 0, 1.0, 5, 1.5, 0.0, 0.0));
      write("partition.csv", run_partition(opts, 0, "wiener", 0.1, 5.0, 25));
      write("coulomb.csv", run_coulomb_matrix(opts, 0, 0, 0, 10, "coulomb3d"));
      write("divergence.json", run_coulomb_divergence(opts, 100000, 0.1));
      write("log2d.csv", run_coulomb_log2d(50));
      write("lamb.csv", run_lamb(opts, 0, 5, "both", "stirling"));
      write("constants.json", run_constants());
      if (!ok) return 1;
    }
  } catch (const zonal::Error& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
