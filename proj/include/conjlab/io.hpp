#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "conjlab/corpus.hpp"
#include "conjlab/diagnostics.hpp"
#include "conjlab/periodic_function.hpp"
#include "conjlab/transforms.hpp"

namespace conjlab {

/// Boundary data document, one of two kinds:
///   {"kind": "samples", "n": 8, "values": [...]}        values.size() == n
///   {"kind": "fourier", "a0": 0.0, "cos": [...], "sin": [...]}
/// Unknown extra fields are ignored on parse (corpus documents append an
/// "oracle" object).
struct InputDocument {
  enum class Kind { Samples, Fourier };

  Kind kind = Kind::Samples;
  Eigen::Index n = 0;       // samples kind
  Eigen::ArrayXd values;    // samples kind
  double a0 = 0.0;          // fourier kind
  Eigen::ArrayXd cos_coeffs;
  Eigen::ArrayXd sin_coeffs;

  /// Throws input_error on malformed documents (wrong/missing fields,
  /// length mismatch, non-finite numbers).
  static InputDocument parse(const std::string& text);
  static InputDocument from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  /// Samples kind: analyze on the grid of size n. Fourier kind: the smallest
  /// power-of-two grid (>= 4) resolving the coefficient degree.
  PeriodicFunction to_function() const;

  static InputDocument samples_of(const PeriodicFunction& f);
  static InputDocument fourier_of(const PeriodicFunction& f);
};

/// 64-bit FNV-1a digest, hex-encoded; used to fingerprint inputs in reports.
std::string fnv1a_digest(std::string_view data);

nlohmann::json profile_to_json(const ConvergenceProfile& p);
nlohmann::json theorem_a_to_json(const TheoremAReport& r);
nlohmann::json extension_to_json(const AnalyticExtension& e);
nlohmann::json report_to_json(const DiagnosticReport& r);

/// Corpus entry as a pipe-able InputDocument (fourier kind) with the oracle
/// metadata attached under "oracle".
nlohmann::json corpus_to_json(const CorpusEntry& e);

std::string profile_to_csv(const ConvergenceProfile& p);
std::string theorem_a_to_csv(const TheoremAReport& r);

}  // namespace conjlab
