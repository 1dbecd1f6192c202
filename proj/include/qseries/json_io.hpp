#pragma once

// JSON encodings of the verification records. Exact integers are written as
// decimal strings so no precision is lost; residues are plain numbers.

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "qseries/congruence.hpp"
#include "qseries/identities.hpp"
#include "qseries/series.hpp"

namespace qseries {

using json = nlohmann::json;

void to_json(json& j, const TruncatedSeries& s);
void from_json(const json& j, TruncatedSeries& s);

void to_json(json& j, const Progression& p);
void from_json(const json& j, Progression& p);

void to_json(json& j, const Counterexample& c);
void from_json(const json& j, Counterexample& c);

void to_json(json& j, const CongruenceReport& r);
void from_json(const json& j, CongruenceReport& r);

void to_json(json& j, const ProofStepResult& r);
void from_json(const json& j, ProofStepResult& r);

void to_json(json& j, const WitnessClass& w);
void from_json(const json& j, WitnessClass& w);

void to_json(json& j, const ResidueAnalysis& r);
void from_json(const json& j, ResidueAnalysis& r);

std::string verdict_name(Verdict v);
Verdict parse_verdict(const std::string& name);

/// Top-level record printed by the command-line tool.
struct OutputEnvelope {
  std::string command;
  json parameters = json::object();
  bool ok = true;
  std::int64_t elapsed_ms = 0;
  json results = json::array();

  friend bool operator==(const OutputEnvelope&, const OutputEnvelope&) = default;
};

void to_json(json& j, const OutputEnvelope& e);
void from_json(const json& j, OutputEnvelope& e);

}  // namespace qseries
