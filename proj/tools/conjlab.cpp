// conjlab: conjugate functions on the circle, truncated conjugate integrals,
// Abel means, and uniform-convergence diagnostics for the question whether a
// boundary function is the real part of a disc-algebra function.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "conjlab/corpus.hpp"
#include "conjlab/diagnostics.hpp"
#include "conjlab/errors.hpp"
#include "conjlab/io.hpp"
#include "conjlab/transforms.hpp"
#include "conjlab/version.hpp"

namespace {

using conjlab::InputDocument;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitConvergence = 4;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw conjlab::input_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw conjlab::input_error("cannot open output file: " + path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

json tool_header() {
  return json{{"name", conjlab::kToolName}, {"version", conjlab::kToolVersion}};
}

struct CommonIo {
  std::string in_path;
  std::string out_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--in", in_path, "input document path (default: stdin)");
    cmd->add_option("--out", out_path, "output path (default: stdout)");
  }
};

struct LoadedInput {
  InputDocument doc;
  conjlab::PeriodicFunction function;
  std::string digest;
};

LoadedInput load(const CommonIo& io) {
  const std::string text = read_input(io.in_path);
  InputDocument doc = InputDocument::parse(text);
  conjlab::PeriodicFunction f = doc.to_function();
  std::string digest = conjlab::fnv1a_digest(doc.to_json().dump());
  return LoadedInput{std::move(doc), std::move(f), std::move(digest)};
}

std::vector<double> parse_radius_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw conjlab::input_error("cannot parse radius: " + item);
    }
  }
  if (out.empty()) throw conjlab::input_error("empty radius list");
  return out;
}

int cmd_conjugate(const CommonIo& io) {
  LoadedInput in = load(io);
  const conjlab::PeriodicFunction conj = conjlab::conj_spectral(in.function);
  const InputDocument out = in.doc.kind == InputDocument::Kind::Samples
                                ? InputDocument::samples_of(conj)
                                : InputDocument::fourier_of(conj);
  write_output(io.out_path, out.to_json().dump(2));
  return kExitOk;
}

int cmd_truncate(const CommonIo& io, double h, const std::string& method,
                 double tol, int max_panels) {
  LoadedInput in = load(io);
  if (method == "fast") {
    const auto g = conjlab::truncated_conjugate_fast(in.function, h);
    write_output(io.out_path, InputDocument::fourier_of(g).to_json().dump(2));
    return kExitOk;
  }
  if (method != "quadrature") {
    throw conjlab::input_error("method must be \"fast\" or \"quadrature\"");
  }

  const conjlab::QuadratureOptions opts{tol, max_panels};
  const auto& grid = in.function.grid();
  Eigen::ArrayXd values(grid.size());
  double worst_error = 0.0;
  Eigen::Index failures = 0;
  for (Eigen::Index j = 0; j < grid.size(); ++j) {
    try {
      const auto r = conjlab::truncated_conjugate_quadrature(
          in.function, grid.point(j), h, opts);
      values[j] = r.value;
      worst_error = std::max(worst_error, r.error_estimate);
    } catch (const conjlab::convergence_error& e) {
      values[j] = e.best_estimate();
      worst_error = std::max(worst_error, e.error_estimate());
      ++failures;
    }
  }
  json out;
  out["kind"] = "samples";
  out["n"] = grid.size();
  out["values"] = json::array();
  for (Eigen::Index j = 0; j < grid.size(); ++j) out["values"].push_back(values[j]);
  out["estimated_error"] = worst_error;
  if (failures > 0) {
    out["note"] = "quadrature did not converge at " + std::to_string(failures) +
                  " of " + std::to_string(grid.size()) +
                  " points; best estimates reported";
  }
  write_output(io.out_path, out.dump(2));
  return failures > 0 ? kExitConvergence : kExitOk;
}

json diagnostic_report_json(const LoadedInput& in, const json& parameters,
                            const conjlab::DiagnosticReport& report,
                            const conjlab::AnalyticExtension* extension) {
  json out;
  out["tool"] = tool_header();
  out["input_digest"] = in.digest;
  out["parameters"] = parameters;
  json body = conjlab::report_to_json(report);
  out["verdict"] = body["verdict"];
  out["fitted_decay"] = body["fitted_decay"];
  out["profile"] = body["profile"];
  out["notes"] = body["notes"];
  if (extension != nullptr) {
    out["extension"] = conjlab::extension_to_json(*extension);
  }
  return out;
}

int cmd_zamansky_like(const CommonIo& io, conjlab::DiagnosticConfig config,
                      bool with_extension, bool csv) {
  LoadedInput in = load(io);
  // Fourier inputs carry no grid of their own. The profile floor is tied to
  // the grid (h_min ~ 2*pi/n), so synthesize them on a grid fine enough for
  // the default tolerances to be reachable; sampled inputs keep their n.
  if (in.doc.kind == InputDocument::Kind::Fourier &&
      in.function.grid().size() < 16384) {
    conjlab::FourierCoefficients c{in.doc.a0, in.doc.cos_coeffs,
                                   in.doc.sin_coeffs};
    in.function = conjlab::from_coefficients(conjlab::Grid(16384), c);
  }
  const conjlab::DiscAlgebraResult result =
      conjlab::disc_algebra_test(in.function, config);
  if (csv) {
    write_output(io.out_path, conjlab::profile_to_csv(result.report.profile));
    return kExitOk;
  }
  const double h_min_used = config.h_min > 0.0
                                ? config.h_min
                                : conjlab::default_h_min(in.function.grid());
  const json parameters{{"h_count", config.h_count},
                        {"h_max", config.h_max},
                        {"h_min", h_min_used},
                        {"tol_abs", config.classify.tol_abs},
                        {"alpha_min", config.classify.alpha_min},
                        {"oversample", config.oversample},
                        {"grid_n", in.function.grid().size()}};
  const json out = diagnostic_report_json(
      in, parameters, result.report, with_extension ? &result.extension : nullptr);
  write_output(io.out_path, out.dump(2));
  return kExitOk;
}

int cmd_theorem_a(const CommonIo& io, const std::string& r_csv, int threads,
                  bool csv) {
  LoadedInput in = load(io);
  const std::vector<double> radii = parse_radius_list(r_csv);
  const conjlab::TheoremAReport report =
      conjlab::theorem_a_report(in.function, radii, 8, threads);
  if (csv) {
    write_output(io.out_path, conjlab::theorem_a_to_csv(report));
    return kExitOk;
  }
  json out;
  out["tool"] = tool_header();
  out["input_digest"] = in.digest;
  out["parameters"] = json{{"r", radii}, {"grid_n", in.function.grid().size()}};
  out["rows"] = conjlab::theorem_a_to_json(report);
  write_output(io.out_path, out.dump(2));
  return kExitOk;
}

int cmd_corpus(const CommonIo& io, const std::string& name, std::uint64_t seed,
               Eigen::Index degree, Eigen::Index terms, double alpha,
               Eigen::Index grid_n) {
  std::optional<conjlab::CorpusEntry> entry;
  if (name == "trig_poly") {
    entry = conjlab::trig_poly(seed, degree, grid_n);
  } else if (name == "log_sine_series") {
    entry = conjlab::log_sine_series(terms, grid_n);
  } else if (name == "holder_cusp") {
    entry = conjlab::holder_cusp(alpha, grid_n);
  } else {
    throw conjlab::input_error("unknown corpus entry: " + name);
  }
  write_output(io.out_path, conjlab::corpus_to_json(*entry).dump(2));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conjugate-function toolkit for the circle and the unit disc"};
  app.require_subcommand(1);

  CommonIo conj_io;
  auto* conj_cmd = app.add_subcommand(
      "conjugate", "spectral conjugate (Hilbert transform) of the input");
  conj_io.attach(conj_cmd);

  CommonIo trunc_io;
  double trunc_h = 0.0;
  std::string trunc_method = "fast";
  double trunc_tol = 1e-10;
  int trunc_max_panels = 20000;
  auto* trunc_cmd = app.add_subcommand(
      "truncate", "truncated conjugate integral with lower limit h");
  trunc_io.attach(trunc_cmd);
  // frees the short -h so the spec'd --h option can exist
  trunc_cmd->set_help_flag("--help", "print help");
  trunc_cmd->add_option("--h", trunc_h, "integration lower limit in (0, pi]")
      ->required();
  trunc_cmd->add_option("--method", trunc_method, "fast | quadrature")
      ->default_val("fast");
  trunc_cmd->add_option("--tol", trunc_tol, "quadrature relative tolerance")
      ->default_val(1e-10);
  trunc_cmd->add_option("--max-panels", trunc_max_panels,
                        "quadrature panel budget")
      ->default_val(20000);

  CommonIo zam_io;
  conjlab::DiagnosticConfig zam_config;
  bool zam_csv = false;
  auto* zam_cmd = app.add_subcommand(
      "zamansky", "uniform-convergence profile and verdict for f~(.,h)");
  zam_io.attach(zam_cmd);
  zam_cmd->add_option("--h-max", zam_config.h_max)->default_val(1.0);
  zam_cmd->add_option("--h-min", zam_config.h_min,
                      "0 = max(2*pi/n, 1e-5)")->default_val(0.0);
  zam_cmd->add_option("--h-count", zam_config.h_count)->default_val(24);
  zam_cmd->add_option("--tol-abs", zam_config.classify.tol_abs)->default_val(1e-3);
  zam_cmd->add_option("--alpha-min", zam_config.classify.alpha_min)
      ->default_val(0.3);
  zam_cmd->add_option("--threads", zam_config.threads,
                      "sweep parallelism (0 = all cores)")->default_val(0);
  zam_cmd->add_flag("--csv", zam_csv, "emit profile rows as CSV only");

  CommonIo tha_io;
  std::string tha_r = "0.5,0.9,0.99,0.999";
  int tha_threads = 0;
  bool tha_csv = false;
  auto* tha_cmd = app.add_subcommand(
      "theorem-a", "Abel-mean vs truncated-integral gaps at h = 1 - r");
  tha_io.attach(tha_cmd);
  tha_cmd->add_option("--r", tha_r, "comma-separated radii in [0, 1-1e-6]");
  tha_cmd->add_option("--threads", tha_threads)->default_val(0);
  tha_cmd->add_flag("--csv", tha_csv, "emit rows as CSV only");

  CommonIo disc_io;
  conjlab::DiagnosticConfig disc_config;
  bool disc_csv = false;
  auto* disc_cmd = app.add_subcommand(
      "discalg",
      "disc-algebra membership diagnostic; report includes the candidate "
      "analytic extension");
  disc_io.attach(disc_cmd);
  disc_cmd->add_option("--h-max", disc_config.h_max)->default_val(1.0);
  disc_cmd->add_option("--h-min", disc_config.h_min)->default_val(0.0);
  disc_cmd->add_option("--h-count", disc_config.h_count)->default_val(24);
  disc_cmd->add_option("--tol-abs", disc_config.classify.tol_abs)
      ->default_val(1e-3);
  disc_cmd->add_option("--alpha-min", disc_config.classify.alpha_min)
      ->default_val(0.3);
  disc_cmd->add_option("--threads", disc_config.threads)->default_val(0);
  disc_cmd->add_flag("--csv", disc_csv, "emit profile rows as CSV only");

  CommonIo corpus_io;
  std::string corpus_name;
  std::uint64_t corpus_seed = 0;
  Eigen::Index corpus_degree = 8;
  Eigen::Index corpus_terms = 4096;
  double corpus_alpha = 0.75;
  Eigen::Index corpus_n = 256;
  auto* corpus_cmd = app.add_subcommand(
      "corpus", "emit a reference boundary function with its oracle data");
  corpus_io.attach(corpus_cmd);
  corpus_cmd
      ->add_option("name", corpus_name,
                   "trig_poly | log_sine_series | holder_cusp")
      ->required();
  corpus_cmd->add_option("--seed", corpus_seed)->default_val(0);
  corpus_cmd->add_option("--degree", corpus_degree)->default_val(8);
  corpus_cmd->add_option("--terms,--N", corpus_terms)->default_val(4096);
  corpus_cmd->add_option("--alpha", corpus_alpha)->default_val(0.75);
  corpus_cmd->add_option("--n", corpus_n, "grid size (power of two >= 4)")
      ->default_val(256);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (conj_cmd->parsed()) return cmd_conjugate(conj_io);
    if (trunc_cmd->parsed()) {
      return cmd_truncate(trunc_io, trunc_h, trunc_method, trunc_tol,
                          trunc_max_panels);
    }
    if (zam_cmd->parsed()) {
      return cmd_zamansky_like(zam_io, zam_config, /*with_extension=*/false,
                               zam_csv);
    }
    if (tha_cmd->parsed()) {
      return cmd_theorem_a(tha_io, tha_r, tha_threads, tha_csv);
    }
    if (disc_cmd->parsed()) {
      return cmd_zamansky_like(disc_io, disc_config, /*with_extension=*/true,
                               disc_csv);
    }
    if (corpus_cmd->parsed()) {
      return cmd_corpus(corpus_io, corpus_name, corpus_seed, corpus_degree,
                        corpus_terms, corpus_alpha, corpus_n);
    }
  } catch (const conjlab::input_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const conjlab::convergence_error& e) {
    std::cerr << "convergence error: " << e.what()
              << " (best estimate " << e.best_estimate() << ")\n";
    return kExitConvergence;
  } catch (const conjlab::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
