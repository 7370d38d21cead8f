// phononet: spectra, Wiener capacities, phonon thermodynamics and spectral
// bounds of harmonic networks on finite graphs.
//
// Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 numerical
// failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phononet/phononet.hpp"

using namespace phononet;

namespace {

std::string fmt(double v) { return format_number(v); }

Graph load_graph(const std::string& file, const std::string& gen);
GeneratorSpec parse_generator(const std::string& text);

// ---------------------------------------------------------------- sources

GeneratorSpec parse_generator(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("generator spec must be <kind>:<args>, e.g. complete:5");
  const std::string kind = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);

  const auto to_int = [](const std::string& s) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid integer in generator spec: '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("invalid integer in generator spec: '" + s + "'");
    return v;
  };

  GeneratorSpec spec{};
  if (kind == "path" || kind == "cycle" || kind == "complete") {
    spec.kind = kind == "path" ? GraphKind::path
              : kind == "cycle" ? GraphKind::cycle
                                : GraphKind::complete;
    spec.n = to_int(args);
  } else if (kind == "circulant") {
    const auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("circulant spec must be circulant:<n>,<l>");
    spec.kind = GraphKind::circulant;
    spec.n = to_int(args.substr(0, comma));
    spec.l = to_int(args.substr(comma + 1));
  } else {
    throw std::invalid_argument("unknown generator kind '" + kind +
                                "' (expected path, cycle, complete or circulant)");
  }
  validate(spec);
  return spec;
}

Graph load_graph(const std::string& file, const std::string& gen) {
  if (file.empty() == gen.empty())
    throw std::invalid_argument("exactly one of --file or --gen is required");
  if (!gen.empty()) return generate(parse_generator(gen));

  std::ifstream in(file, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + file);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

// ------------------------------------------------------------ subcommands

void cmd_spectrum(const std::string& file, const std::string& gen) {
  const Graph g = load_graph(file, gen);
  const CapacityProfile profile = capacity_profile(g);
  const Spectrum spectrum = eigendecompose(g);

  std::cout << "n = " << g.num_vertices() << '\n';
  std::cout << "eigenvalues:";
  for (int i = 0; i < spectrum.eigenvalues.size(); ++i)
    std::cout << ' ' << fmt(spectrum.eigenvalues[i]);
  std::cout << '\n';
  std::cout << "cap_avg = " << fmt(profile.average) << '\n';
  std::cout << "kirchhoff = " << fmt(profile.kirchhoff) << '\n';
  std::cout << "cap_ratio = " << fmt(profile.kirchhoff / g.num_vertices()) << '\n';
}

void cmd_thermo(const std::string& file, const std::string& gen, double beta, double volume) {
  const Graph g = load_graph(file, gen);
  const int n = g.num_vertices();
  const CapacityProfile profile = capacity_profile(g);
  const Spectrum spectrum = eigendecompose(g);
  const ThermoPoint tp = thermo_point(spectrum.eigenvalues, beta);
  const RegimeIndicator regime = regime_indicator(tp, volume);
  const BoundReport report = make_bound_report(profile, n, tp);

  std::cout << "n = " << n << '\n';
  std::cout << "beta = " << fmt(beta) << '\n';
  std::cout << "avg_N = " << fmt(tp.avg_N) << '\n';
  std::cout << "avg_H = " << fmt(tp.avg_H) << '\n';
  std::cout << "heat = " << fmt(tp.heat) << '\n';
  std::cout << "regime = " << fmt(regime.value) << " (volume = " << fmt(volume) << ")\n";
  std::cout << "cap_ratio = " << fmt(report.cap_ratio) << '\n';
  std::cout << "phonon_bound = " << fmt(report.phonon_bound)
            << "  holds_N = " << (report.holds_n ? "yes" : "no") << '\n';
  if (report.heat_bound)
    std::cout << "heat_bound = " << fmt(*report.heat_bound)
              << "  holds_c = " << (*report.holds_c ? "yes" : "no") << '\n';
  else
    std::cout << "heat_bound = not engaged (requires beta^2 > cap_avg/n)\n";
}

void write_result(const SweepResult& result, const std::string& output_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(output_dir);
  const fs::path dir(output_dir);

  const fs::path csv_path = dir / (result.name + ".csv");
  write_csv_file(csv_path.string(), result.columns, result.rows);
  std::cout << "wrote " << csv_path.string() << '\n';

  for (const auto& chart : result.charts) {
    const fs::path svg_path = dir / (chart.name + ".svg");
    write_svg_file(svg_path.string(), chart.series, chart.options);
    std::cout << "wrote " << svg_path.string() << '\n';
  }
}

void cmd_constants(int k_max) {
  const BoundConstants constants = compute_bound_constants(k_max);
  for (const auto& [k, value] : constants.alpha_n)
    std::cout << "alpha_N(" << k << ") = " << fmt(value) << '\n';
  std::cout << "alpha_E = " << fmt(constants.alpha_e) << '\n';
  std::cout << "x_star = " << fmt(constants.x_star_e) << '\n';
}

void cmd_classify(const std::string& family, double r, const std::vector<int>& sizes,
                  double slope_tol, double window) {
  std::function<GeneratorSpec(int)> rule;
  std::string label = family;
  if (family == "complete") {
    rule = [](int n) { return GeneratorSpec{GraphKind::complete, n, 0}; };
  } else if (family == "path") {
    rule = [](int n) { return GeneratorSpec{GraphKind::path, n, 0}; };
  } else if (family == "cycle") {
    rule = [](int n) { return GeneratorSpec{GraphKind::cycle, n, 0}; };
  } else if (family == "circulant") {
    if (r < 0.0 || r > 1.0) throw std::invalid_argument("--r must lie in [0,1]");
    rule = [r](int n) {
      const int l = std::clamp(sweep_l(n, r), 1, (n - 1) / 2);
      return GeneratorSpec{GraphKind::circulant, n, l};
    };
    label += " r=" + detail::format_r(r);
  } else {
    throw std::invalid_argument("unknown family '" + family +
                                "' (expected complete, path, cycle or circulant)");
  }

  ClassifyOptions options;
  options.slope_tolerance = slope_tol;
  options.window_fraction = window;
  const FamilyClassification result = classify_family(rule, sizes, options, label);

  std::cout << "family = " << result.family << '\n';
  for (const auto& s : result.samples)
    std::cout << "n = " << s.n << "  cap_ratio = " << fmt(s.cap_ratio) << '\n';
  std::cout << "slope = " << fmt(result.slope) << '\n';
  std::cout << "verdict = "
            << (result.verdict == FamilyVerdict::bounded ? "bounded" : "divergent") << '\n';
}

// ----------------------------------------------------------------- ranges

IntRange parse_int_range(const std::string& text) {
  IntRange r;
  if (std::sscanf(text.c_str(), "%d:%d:%d", &r.start, &r.stop, &r.step) == 3) return r;
  r.step = 1;
  if (std::sscanf(text.c_str(), "%d:%d", &r.start, &r.stop) == 2) return r;
  throw std::invalid_argument("range must be <start>:<stop>[:<step>], got '" + text + "'");
}

RealRange parse_real_range(const std::string& text) {
  RealRange r;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &r.start, &r.stop, &r.step) == 3) return r;
  throw std::invalid_argument("range must be <start>:<stop>:<step>, got '" + text + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phonon thermodynamics and spectral bounds of harmonic networks on graphs"};
  app.require_subcommand(1);

  std::string file, gen;
  double beta = 1.0, volume = 1.0;

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and Wiener capacities");
  spectrum->add_option("--file", file, "edge-list file");
  spectrum->add_option("--gen", gen, "generator spec <kind>:<args>");

  auto* thermo = app.add_subcommand("thermo", "Thermodynamics and bounds at one temperature");
  thermo->add_option("--file", file, "edge-list file");
  thermo->add_option("--gen", gen, "generator spec <kind>:<args>");
  thermo->add_option("--beta", beta, "inverse temperature (> 0)")
      ->required()
      ->check(CLI::PositiveNumber);
  thermo->add_option("--volume", volume, "volume for the regime indicator")
      ->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "Parameter sweeps with CSV + SVG output");
  std::string experiment, output_dir = ".";
  std::string n_range_text, l_range_text, t_range_text;
  SweepConfig config;
  sweep->add_option("--experiment", experiment, "phonons_vs_n, cap_vs_n, heat_vs_l or bound_vs_T")
      ->required();
  sweep->add_option("--output-dir", output_dir, "directory for CSV/SVG files");
  sweep->add_option("--beta", config.beta, "inverse temperature")->check(CLI::PositiveNumber);
  sweep->add_option("--n-range", n_range_text, "n grid <start>:<stop>[:<step>]");
  sweep->add_option("--l-range", l_range_text, "l grid <start>:<stop>[:<step>] (heat_vs_l)");
  sweep->add_option("--t-range", t_range_text, "T grid <start>:<stop>:<step> (bound_vs_T)");
  sweep->add_option("--r-values", config.r_values, "exponents r in [0,1]");
  sweep->add_option("--l-values", config.l_values, "l values (bound_vs_T)");
  sweep->add_option("--n-fixed", config.n_fixed, "fixed n (heat_vs_l, bound_vs_T)");
  sweep->add_flag("--include-complete", config.include_complete,
                  "append the complete graph as a final heat_vs_l point");

  auto* constants = app.add_subcommand("constants", "Bound constants alpha_N(k) and alpha_E");
  int k_max = 5;
  constants->add_option("--k-max", k_max, "largest k in the alpha_N table")
      ->check(CLI::Range(2, 200));

  auto* classify = app.add_subcommand("classify", "Phase classification of a graph family");
  std::string family;
  double r_exponent = 0.5, slope_tol = 0.1, window = 0.5;
  std::string sizes_text = "10:200:10";
  classify->add_option("--family", family, "complete, path, cycle or circulant")->required();
  classify->add_option("--r", r_exponent, "exponent for the circulant family l = floor((n/2)^r)");
  classify->add_option("--sizes", sizes_text, "n grid <start>:<stop>[:<step>]");
  classify->add_option("--slope-tol", slope_tol, "bounded iff slope <= 1 + tol");
  classify->add_option("--window", window, "top fraction of samples used for the fit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(spectrum)) {
      cmd_spectrum(file, gen);
    } else if (app.got_subcommand(thermo)) {
      cmd_thermo(file, gen, beta, volume);
    } else if (app.got_subcommand(sweep)) {
      if (!n_range_text.empty()) config.n_range = parse_int_range(n_range_text);
      if (!l_range_text.empty()) config.l_range = parse_int_range(l_range_text);
      if (!t_range_text.empty()) config.t_range = parse_real_range(t_range_text);
      if (experiment == "phonons_vs_n")
        write_result(run_phonons_vs_n(config), output_dir);
      else if (experiment == "cap_vs_n")
        write_result(run_cap_vs_n(config), output_dir);
      else if (experiment == "heat_vs_l")
        write_result(run_heat_vs_l(config), output_dir);
      else if (experiment == "bound_vs_T")
        write_result(run_bound_vs_t(config), output_dir);
      else
        throw std::invalid_argument("unknown experiment '" + experiment + "'");
    } else if (app.got_subcommand(constants)) {
      cmd_constants(k_max);
    } else if (app.got_subcommand(classify)) {
      const IntRange range = parse_int_range(sizes_text);
      cmd_classify(family, r_exponent, detail::materialize(range), slope_tol, window);
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const disconnected_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const numeric_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
