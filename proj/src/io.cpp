#include "conjlab/io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "conjlab/errors.hpp"

namespace conjlab {

using nlohmann::json;

namespace {

Eigen::ArrayXd finite_array(const json& j, const char* field) {
  if (!j.is_array()) {
    throw input_error(std::string(field) + " must be an array of numbers");
  }
  Eigen::ArrayXd out(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& v : j) {
    if (!v.is_number()) {
      throw input_error(std::string(field) + " must contain only numbers");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
      throw input_error(std::string(field) + " contains a non-finite value");
    }
    out[i++] = d;
  }
  return out;
}

double finite_number(const json& j, const char* field) {
  if (!j.is_number()) throw input_error(std::string(field) + " must be a number");
  const double d = j.get<double>();
  if (!std::isfinite(d)) throw input_error(std::string(field) + " is not finite");
  return d;
}

json array_of(const Eigen::ArrayXd& a) {
  json out = json::array();
  for (Eigen::Index i = 0; i < a.size(); ++i) out.push_back(a[i]);
  return out;
}

Eigen::Index next_power_of_two(Eigen::Index n) {
  Eigen::Index p = 4;
  while (p < n) p *= 2;
  return p;
}

// Trailing all-zero coefficient pairs are dropped (down to at least one pair)
// so emitted documents stay close to the data's natural degree.
Eigen::Index trimmed_length(const FourierCoefficients& c) {
  const Eigen::Index deg = c.degree();
  return std::max<Eigen::Index>(deg, 1);
}

json fourier_json(const PeriodicFunction& f) {
  const auto& c = f.coeffs();
  const Eigen::Index len = trimmed_length(c);
  json j;
  j["kind"] = "fourier";
  j["a0"] = c.a0;
  j["cos"] = array_of(c.cos_coeffs.head(len));
  j["sin"] = array_of(c.sin_coeffs.head(len));
  return j;
}

}  // namespace

InputDocument InputDocument::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

InputDocument InputDocument::from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw input_error("input document must be an object with a \"kind\" field");
  }
  const std::string kind = j["kind"].get<std::string>();
  InputDocument doc;
  if (kind == "samples") {
    if (j.contains("cos") || j.contains("sin") || j.contains("a0")) {
      throw input_error("samples document must not carry fourier fields");
    }
    if (!j.contains("n") || !j.contains("values")) {
      throw input_error("samples document requires \"n\" and \"values\"");
    }
    if (!j["n"].is_number_integer()) throw input_error("\"n\" must be an integer");
    doc.kind = Kind::Samples;
    doc.n = j["n"].get<Eigen::Index>();
    doc.values = finite_array(j["values"], "values");
    if (doc.values.size() != doc.n) {
      throw input_error("\"values\" length does not match \"n\"");
    }
  } else if (kind == "fourier") {
    if (j.contains("values") || j.contains("n")) {
      throw input_error("fourier document must not carry samples fields");
    }
    if (!j.contains("a0") || !j.contains("cos") || !j.contains("sin")) {
      throw input_error("fourier document requires \"a0\", \"cos\", \"sin\"");
    }
    doc.kind = Kind::Fourier;
    doc.a0 = finite_number(j["a0"], "a0");
    doc.cos_coeffs = finite_array(j["cos"], "cos");
    doc.sin_coeffs = finite_array(j["sin"], "sin");
    if (doc.cos_coeffs.size() != doc.sin_coeffs.size()) {
      throw input_error("\"cos\" and \"sin\" must have equal length");
    }
  } else {
    throw input_error("unknown document kind: " + kind);
  }
  return doc;
}

json InputDocument::to_json() const {
  json j;
  if (kind == Kind::Samples) {
    j["kind"] = "samples";
    j["n"] = n;
    j["values"] = array_of(values);
  } else {
    j["kind"] = "fourier";
    j["a0"] = a0;
    j["cos"] = array_of(cos_coeffs);
    j["sin"] = array_of(sin_coeffs);
  }
  return j;
}

PeriodicFunction InputDocument::to_function() const {
  if (kind == Kind::Samples) {
    return analyze(Grid(n), values);
  }
  FourierCoefficients c{a0, cos_coeffs, sin_coeffs};
  const Eigen::Index grid_n = next_power_of_two(2 * (c.size() + 1));
  return from_coefficients(Grid(grid_n), c);
}

InputDocument InputDocument::samples_of(const PeriodicFunction& f) {
  InputDocument doc;
  doc.kind = Kind::Samples;
  doc.n = f.grid().size();
  doc.values = f.samples();
  return doc;
}

InputDocument InputDocument::fourier_of(const PeriodicFunction& f) {
  InputDocument doc;
  doc.kind = Kind::Fourier;
  const auto& c = f.coeffs();
  const Eigen::Index len = trimmed_length(c);
  doc.a0 = c.a0;
  doc.cos_coeffs = c.cos_coeffs.head(len);
  doc.sin_coeffs = c.sin_coeffs.head(len);
  return doc;
}

std::string fnv1a_digest(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const char ch : data) {
    hash ^= static_cast<unsigned char>(ch);
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buf);
}

json profile_to_json(const ConvergenceProfile& p) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    rows.push_back(json{{"h", p.h_values[i]},
                        {"M", p.sup_dev[i]},
                        {"D", p.cauchy[i]}});
  }
  return rows;
}

json theorem_a_to_json(const TheoremAReport& r) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    const bool triangle_ok =
        r.gap[i] <= r.abel_gap[i] + r.truncation_gap[i] + 1e-12;
    rows.push_back(json{{"r", r.r_values[i]},
                        {"G", r.gap[i]},
                        {"G1", r.abel_gap[i]},
                        {"G2", r.truncation_gap[i]},
                        {"triangle_ok", triangle_ok}});
  }
  return rows;
}

json extension_to_json(const AnalyticExtension& e) {
  json re = json::array(), im = json::array();
  for (Eigen::Index k = 0; k < e.size(); ++k) {
    re.push_back(e.coeffs[k].real());
    im.push_back(e.coeffs[k].imag());
  }
  return json{{"c0", e.c0}, {"re", re}, {"im", im}};
}

json report_to_json(const DiagnosticReport& r) {
  json fitted;
  if (r.fitted_decay.degenerate) {
    fitted = json{{"alpha", nullptr}, {"constant", nullptr}, {"degenerate", true}};
  } else {
    fitted = json{{"alpha", r.fitted_decay.alpha},
                  {"constant", r.fitted_decay.constant},
                  {"degenerate", false}};
  }
  return json{{"verdict", std::string(to_string(r.verdict))},
              {"fitted_decay", fitted},
              {"profile", profile_to_json(r.profile)},
              {"notes", r.notes}};
}

json corpus_to_json(const CorpusEntry& e) {
  json j = fourier_json(e.f);
  json oracle;
  oracle["name"] = e.name;
  oracle["expected_verdict"] = std::string(to_string(e.expected_verdict));
  oracle["provenance"] = e.provenance;
  oracle["exact_conjugate"] =
      e.exact_conjugate ? fourier_json(*e.exact_conjugate) : json(nullptr);
  oracle["antiderivative"] =
      e.antiderivative ? fourier_json(*e.antiderivative) : json(nullptr);
  j["oracle"] = oracle;
  return j;
}

namespace {
std::string format_row(std::initializer_list<double> cells) {
  std::string line;
  bool first = true;
  char buf[32];
  for (const double v : cells) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    if (!first) line += ',';
    line += buf;
    first = false;
  }
  line += '\n';
  return line;
}
}  // namespace

std::string profile_to_csv(const ConvergenceProfile& p) {
  std::string out = "h,M,D\n";
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    out += format_row({p.h_values[i], p.sup_dev[i], p.cauchy[i]});
  }
  return out;
}

std::string theorem_a_to_csv(const TheoremAReport& r) {
  std::string out = "r,G,G1,G2\n";
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    out += format_row({r.r_values[i], r.gap[i], r.abel_gap[i], r.truncation_gap[i]});
  }
  return out;
}

}  // namespace conjlab
