#include "qseries/json_io.hpp"

#include <stdexcept>

namespace qseries {

namespace {

BigInt parse_bigint(const json& j) {
  if (j.is_number_integer()) return BigInt{j.get<long>()};
  return BigInt{j.get<std::string>(), 10};
}

}  // namespace

void to_json(json& j, const TruncatedSeries& s) {
  json coeffs = json::array();
  if (s.ring().is_exact()) {
    for (const auto& c : s.exact_coeffs()) coeffs.push_back(c.get_str());
  } else {
    for (const auto r : s.residues()) coeffs.push_back(r);
  }
  j = json{{"ring", s.ring().name()}, {"order", s.order()}, {"coefficients", std::move(coeffs)}};
}

void from_json(const json& j, TruncatedSeries& s) {
  const auto ring = CoefficientRing::parse(j.at("ring").get<std::string>());
  const auto& coeffs = j.at("coefficients");
  if (coeffs.size() != j.at("order").get<std::size_t>() + 1) {
    throw std::invalid_argument("series JSON: coefficient count does not match order");
  }
  std::vector<BigInt> values;
  values.reserve(coeffs.size());
  for (const auto& c : coeffs) values.push_back(parse_bigint(c));
  s = TruncatedSeries{ring, std::move(values)};
}

void to_json(json& j, const Progression& p) {
  j = json{{"stride", p.stride}, {"offset", p.offset}};
}

void from_json(const json& j, Progression& p) {
  j.at("stride").get_to(p.stride);
  j.at("offset").get_to(p.offset);
}

void to_json(json& j, const Counterexample& c) {
  j = json{{"n", c.n}, {"index", c.index}, {"value", c.value.get_str()}, {"residue", c.residue}};
}

void from_json(const json& j, Counterexample& c) {
  j.at("n").get_to(c.n);
  j.at("index").get_to(c.index);
  c.value = parse_bigint(j.at("value"));
  j.at("residue").get_to(c.residue);
}

std::string verdict_name(Verdict v) { return v == Verdict::HoldsUpTo ? "holds_up_to" : "fails"; }

Verdict parse_verdict(const std::string& name) {
  if (name == "holds_up_to") return Verdict::HoldsUpTo;
  if (name == "fails") return Verdict::Fails;
  throw std::invalid_argument("unknown verdict '" + name + "'");
}

void to_json(json& j, const CongruenceReport& r) {
  j = json{{"k", r.k},
           {"modulus", r.modulus},
           {"progression", r.progression},
           {"bound", r.bound},
           {"verdict", verdict_name(r.verdict)},
           {"counterexample", nullptr}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
}

void from_json(const json& j, CongruenceReport& r) {
  j.at("k").get_to(r.k);
  j.at("modulus").get_to(r.modulus);
  j.at("progression").get_to(r.progression);
  j.at("bound").get_to(r.bound);
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.counterexample.reset();
  if (!j.at("counterexample").is_null()) r.counterexample = j.at("counterexample").get<Counterexample>();
}

void to_json(json& j, const ProofStepResult& r) {
  j = json{{"step_id", r.step_id},
           {"description", r.description},
           {"order", r.order},
           {"passed", r.passed},
           {"first_mismatch", nullptr},
           {"failed_check", r.failed_check},
           {"lhs", r.lhs},
           {"rhs", r.rhs}};
  if (r.first_mismatch) j["first_mismatch"] = *r.first_mismatch;
}

void from_json(const json& j, ProofStepResult& r) {
  j.at("step_id").get_to(r.step_id);
  j.at("description").get_to(r.description);
  j.at("order").get_to(r.order);
  j.at("passed").get_to(r.passed);
  r.first_mismatch.reset();
  if (!j.at("first_mismatch").is_null()) r.first_mismatch = j.at("first_mismatch").get<std::size_t>();
  j.at("failed_check").get_to(r.failed_check);
  j.at("lhs").get_to(r.lhs);
  j.at("rhs").get_to(r.rhs);
}

void to_json(json& j, const WitnessClass& w) {
  j = json{{"r", w.r}, {"s", w.s}, {"coefficient_residue", w.coefficient_residue}};
}

void from_json(const json& j, WitnessClass& w) {
  j.at("r").get_to(w.r);
  j.at("s").get_to(w.s);
  j.at("coefficient_residue").get_to(w.coefficient_residue);
}

void to_json(json& j, const ResidueAnalysis& r) {
  j = json{{"modulus", r.modulus},
           {"target", r.target},
           {"triangular_period", r.triangular_period},
           {"triangular_residues", r.triangular_residues},
           {"double_triangular_residues", r.double_triangular_residues},
           {"witness_classes", r.witness_classes}};
}

void from_json(const json& j, ResidueAnalysis& r) {
  j.at("modulus").get_to(r.modulus);
  j.at("target").get_to(r.target);
  j.at("triangular_period").get_to(r.triangular_period);
  j.at("triangular_residues").get_to(r.triangular_residues);
  j.at("double_triangular_residues").get_to(r.double_triangular_residues);
  j.at("witness_classes").get_to(r.witness_classes);
}

void to_json(json& j, const OutputEnvelope& e) {
  j = json{{"command", e.command},
           {"parameters", e.parameters},
           {"status", e.ok ? "ok" : "failed"},
           {"elapsed_ms", e.elapsed_ms},
           {"results", e.results}};
}

void from_json(const json& j, OutputEnvelope& e) {
  j.at("command").get_to(e.command);
  e.parameters = j.at("parameters");
  const auto status = j.at("status").get<std::string>();
  if (status != "ok" && status != "failed") {
    throw std::invalid_argument("unknown envelope status '" + status + "'");
  }
  e.ok = status == "ok";
  j.at("elapsed_ms").get_to(e.elapsed_ms);
  e.results = j.at("results");
}

}  // namespace qseries
