#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cmath>

#include "conjlab/corpus.hpp"
#include "conjlab/errors.hpp"
#include "conjlab/io.hpp"

using namespace conjlab;
using nlohmann::json;

TEST_CASE("samples document round trip") {
  const std::string text =
      R"({"kind":"samples","n":4,"values":[1.0,0.0,-1.0,0.0]})";
  const auto doc = InputDocument::parse(text);
  CHECK(doc.kind == InputDocument::Kind::Samples);
  CHECK(doc.n == 4);
  const auto f = doc.to_function();
  CHECK(f.grid().size() == 4);
  CHECK(f.coeffs().cos_coeffs[0] == doctest::Approx(1.0).epsilon(1e-14));

  const auto back = InputDocument::samples_of(f);
  CHECK(back.to_json()["values"][0].get<double>() == 1.0);
}

TEST_CASE("fourier document chooses the smallest adequate grid") {
  const auto doc =
      InputDocument::parse(R"({"kind":"fourier","a0":0,"cos":[1],"sin":[0]})");
  const auto f = doc.to_function();
  CHECK(f.grid().size() == 4);  // 2*(m+1) with m = 1

  const auto doc3 = InputDocument::parse(
      R"({"kind":"fourier","a0":0,"cos":[0,0,1],"sin":[0,0,0]})");
  CHECK(doc3.to_function().grid().size() == 8);
}

TEST_CASE("malformed documents raise input_error") {
  CHECK_THROWS_AS(InputDocument::parse("not json"), input_error);
  CHECK_THROWS_AS(InputDocument::parse("[]"), input_error);
  CHECK_THROWS_AS(InputDocument::parse(R"({"kind":"what"})"), input_error);
  // length mismatch
  CHECK_THROWS_AS(
      InputDocument::parse(R"({"kind":"samples","n":4,"values":[1,2,3]})"),
      input_error);
  // cos/sin length mismatch
  CHECK_THROWS_AS(
      InputDocument::parse(R"({"kind":"fourier","a0":0,"cos":[1],"sin":[]})"),
      input_error);
  // mixed kinds
  CHECK_THROWS_AS(
      InputDocument::parse(
          R"({"kind":"samples","n":4,"values":[1,2,3,4],"cos":[1]})"),
      input_error);
  // missing fields
  CHECK_THROWS_AS(InputDocument::parse(R"({"kind":"samples","n":4})"),
                  input_error);
  // non-finite number (overflows double)
  CHECK_THROWS_AS(
      InputDocument::parse(R"({"kind":"samples","n":4,"values":[1e999,0,0,0]})"),
      input_error);
  // non-numeric entry
  CHECK_THROWS_AS(
      InputDocument::parse(R"({"kind":"samples","n":4,"values":[1,"x",0,0]})"),
      input_error);
  // grid constraints surface as input errors too
  CHECK_THROWS_AS(
      InputDocument::parse(R"({"kind":"samples","n":6,"values":[1,2,3,4,5,6]})")
          .to_function(),
      input_error);
}

TEST_CASE("unknown extra fields are tolerated") {
  const auto doc = InputDocument::parse(
      R"({"kind":"fourier","a0":1,"cos":[0.5],"sin":[0.25],"oracle":{"x":1}})");
  CHECK(doc.a0 == 1.0);
  CHECK(doc.cos_coeffs[0] == 0.5);
}

TEST_CASE("digest is deterministic and input-sensitive") {
  const std::string a = R"({"kind":"fourier","a0":0,"cos":[1],"sin":[0]})";
  const std::string b = R"({"kind":"fourier","a0":0,"cos":[2],"sin":[0]})";
  CHECK(fnv1a_digest(a) == fnv1a_digest(a));
  CHECK(fnv1a_digest(a) != fnv1a_digest(b));
  CHECK(fnv1a_digest(a).size() == 16);
}

TEST_CASE("report serialization carries verdict, fit, profile, notes") {
  DiagnosticReport r;
  r.verdict = Verdict::NonUniformTrend;
  r.fitted_decay = FittedDecay{0.5, 2.0, false};
  r.profile.h_values = Eigen::ArrayXd::LinSpaced(3, 1.0, 0.1);
  r.profile.sup_dev = Eigen::ArrayXd::Constant(3, 0.25);
  r.profile.cauchy = Eigen::ArrayXd::Constant(3, 0.125);
  r.notes.push_back("test note");

  const json j = report_to_json(r);
  CHECK(j["verdict"] == "non-uniform-trend");
  CHECK(j["fitted_decay"]["alpha"].get<double>() == 0.5);
  CHECK(j["profile"].size() == 3);
  CHECK(j["profile"][0]["M"].get<double>() == 0.25);
  CHECK(j["notes"][0] == "test note");

  // serialized doubles survive a JSON round trip bit-exactly
  const double value = 0.1234567890123456789;
  const json num = json{{"v", value}};
  CHECK(json::parse(num.dump())["v"].get<double>() == value);
}

TEST_CASE("degenerate fit serializes as null alpha") {
  DiagnosticReport r;
  r.fitted_decay.degenerate = true;
  r.profile.h_values = Eigen::ArrayXd::LinSpaced(3, 1.0, 0.1);
  r.profile.sup_dev = Eigen::ArrayXd::Zero(3);
  r.profile.cauchy = Eigen::ArrayXd::Zero(3);
  const json j = report_to_json(r);
  CHECK(j["fitted_decay"]["alpha"].is_null());
  CHECK(j["fitted_decay"]["degenerate"].get<bool>() == true);
}

TEST_CASE("csv emission") {
  ConvergenceProfile p;
  p.h_values = Eigen::ArrayXd::LinSpaced(2, 1.0, 0.5);
  p.sup_dev = Eigen::ArrayXd::Constant(2, 0.25);
  p.cauchy = Eigen::ArrayXd::Constant(2, 0.5);
  const std::string csv = profile_to_csv(p);
  CHECK(csv.substr(0, 6) == "h,M,D\n");
  CHECK(csv.find("1,0.25,0.5\n") != std::string::npos);

  TheoremAReport t;
  t.r_values = Eigen::ArrayXd::Constant(1, 0.9);
  t.gap = Eigen::ArrayXd::Constant(1, 0.1);
  t.abel_gap = Eigen::ArrayXd::Constant(1, 0.05);
  t.truncation_gap = Eigen::ArrayXd::Constant(1, 0.06);
  CHECK(theorem_a_to_csv(t).substr(0, 10) == "r,G,G1,G2\n");
}

TEST_CASE("corpus document is pipeable and carries oracle metadata") {
  const auto entry = trig_poly(3, 4, 64);
  const json j = corpus_to_json(entry);
  CHECK(j["kind"] == "fourier");
  CHECK(j["oracle"]["name"] == "trig_poly");
  CHECK(j["oracle"]["expected_verdict"] == "uniformly-convergent");
  CHECK(j["oracle"]["exact_conjugate"]["kind"] == "fourier");

  // parseable as a plain input document
  const auto doc = InputDocument::parse(j.dump());
  const auto f = doc.to_function();
  CHECK((f.coeffs().cos_coeffs.head(4) - entry.f.coeffs().cos_coeffs.head(4))
            .abs()
            .maxCoeff() < 1e-15);

  const auto cusp = corpus_to_json(holder_cusp(0.5, 256));
  CHECK(cusp["oracle"]["exact_conjugate"].is_null());
}

TEST_CASE("extension serialization") {
  AnalyticExtension e;
  e.c0 = 1.5;
  e.coeffs = Eigen::ArrayXcd(2);
  e.coeffs[0] = std::complex<double>(1.0, -2.0);
  e.coeffs[1] = std::complex<double>(0.0, 0.5);
  const json j = extension_to_json(e);
  CHECK(j["c0"].get<double>() == 1.5);
  CHECK(j["re"][0].get<double>() == 1.0);
  CHECK(j["im"][0].get<double>() == -2.0);
  CHECK(j["im"][1].get<double>() == 0.5);
}
