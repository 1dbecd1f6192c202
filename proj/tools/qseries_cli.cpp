// Command-line front end: congruence verification, characterization of the
// p_k(25n + 24 - k) family, identity checks, and the k = 4 proof replay.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qseries/congruence.hpp"
#include "qseries/identities.hpp"
#include "qseries/json_io.hpp"
#include "qseries/partitions.hpp"

namespace {

using qseries::json;
using qseries::OutputEnvelope;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

const std::map<unsigned, std::uint64_t> kDefaultChanTohBound = {{2, 100}, {3, 40}, {4, 10}};

struct Options {
  std::uint64_t k = 0;
  std::uint64_t bound = 100;
  std::uint64_t modulus = 5;
  std::size_t order = 300;
  unsigned alpha = 2;
  std::optional<std::uint64_t> ell;
  std::uint64_t n = 0;
  std::uint64_t target = 4;
  std::string name;
  std::string format = "table";
  std::string parallel = "off";
};

std::string report_line(const qseries::CongruenceReport& r) {
  std::ostringstream out;
  out << std::setw(4) << r.k << "  " << std::setw(10)
      << (std::to_string(r.progression.stride) + "n+" + std::to_string(r.progression.offset))
      << "  mod " << std::setw(4) << r.modulus << "  ";
  if (r.holds()) {
    out << "holds for n <= " << r.bound;
  } else {
    const auto& c = *r.counterexample;
    out << "FAILS at n = " << c.n << ": p_" << r.k << "(" << c.index
        << ") = " << c.value.get_str() << " = " << c.residue << " mod " << r.modulus;
  }
  return out.str();
}

void print_reports(const std::vector<qseries::CongruenceReport>& reports) {
  std::cout << "   k  progression  modulus  verdict\n";
  for (const auto& r : reports) std::cout << report_line(r) << "\n";
}

std::string step_line(const qseries::ProofStepResult& s) {
  std::ostringstream out;
  out << std::left << std::setw(13) << s.step_id << std::right << std::setw(6) << s.order
      << "  " << (s.passed ? "PASS" : "FAIL") << "  " << s.description;
  if (!s.passed) {
    out << "\n" << std::string(21, ' ') << "failed check '" << s.failed_check
        << "' at exponent " << *s.first_mismatch;
  }
  return out.str();
}

void print_steps(const std::vector<qseries::ProofStepResult>& steps) {
  std::cout << "step          order  result\n";
  for (const auto& s : steps) std::cout << step_line(s) << "\n";
}

// Runs `body`, which fills the envelope and prints table output; then prints
// JSON if requested and maps the status to an exit code.
int run(const std::string& command, const json& parameters, const Options& opts,
        const std::function<void(OutputEnvelope&, bool)>& body) {
  OutputEnvelope envelope;
  envelope.command = command;
  envelope.parameters = parameters;
  const bool table = opts.format == "table";
  const auto start = std::chrono::steady_clock::now();
  body(envelope, table);
  envelope.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  if (table) {
    std::cout << "status: " << (envelope.ok ? "ok" : "failed") << " (" << envelope.elapsed_ms
              << " ms)\n";
  } else {
    std::cout << json(envelope).dump(2) << "\n";
  }
  return envelope.ok ? kExitOk : kExitFailed;
}

void add_reports(OutputEnvelope& e, const std::vector<qseries::CongruenceReport>& reports,
                 bool table) {
  for (const auto& r : reports) {
    e.results.push_back(r);
    e.ok = e.ok && r.holds();
  }
  if (table) print_reports(reports);
}

void add_steps(OutputEnvelope& e, const std::vector<qseries::ProofStepResult>& steps,
               bool table) {
  for (const auto& s : steps) {
    e.results.push_back(s);
    e.ok = e.ok && s.passed;
  }
  if (table) print_steps(steps);
}

int dispatch(const std::string& command, const Options& o) {
  const bool parallel = o.parallel == "on";
  if (command == "verify") {
    return run(command, {{"k", o.k}, {"bound", o.bound}, {"modulus", o.modulus}}, o,
               [&](OutputEnvelope& e, bool table) {
                 add_reports(e, {qseries::verify_family(o.k, o.bound, o.modulus)}, table);
               });
  }
  if (command == "characterize") {
    return run(command, {{"bound", o.bound}, {"parallel", parallel}}, o,
               [&](OutputEnvelope& e, bool table) {
                 const auto reports = qseries::characterize_all(o.bound, parallel);
                 add_reports(e, reports, table);
                 if (table) {
                   std::size_t holds = 0;
                   for (const auto& r : reports) holds += r.holds() ? 1 : 0;
                   std::cout << holds << " hold / " << reports.size() - holds << " fail\n";
                 }
               });
  }
  if (command == "strong-5ell") {
    std::vector<std::uint64_t> ells = {1, 2, 3, 4};
    if (o.ell) ells = {*o.ell};
    return run(command, {{"ell", ells}, {"bound", o.bound}}, o,
               [&](OutputEnvelope& e, bool table) {
                 std::vector<qseries::CongruenceReport> reports;
                 for (const auto ell : ells) {
                   reports.push_back(qseries::verify_strong_5ell(ell, o.bound));
                 }
                 add_reports(e, reports, table);
               });
  }
  if (command == "chan-toh") {
    return run(command, {{"alpha", o.alpha}, {"bound", o.bound}}, o,
               [&](OutputEnvelope& e, bool table) {
                 if (table) {
                   std::cout << "delta_" << o.alpha << " = " << qseries::delta_alpha(o.alpha)
                             << "\n";
                 }
                 add_reports(e, {qseries::verify_chan_toh(o.alpha, o.bound)}, table);
               });
  }
  if (command == "identity") {
    json params = {{"name", o.name}, {"order", o.order}};
    if (o.name == "frobenius") {
      params["k"] = o.k;
      params["modulus"] = o.modulus;
    }
    return run(command, params, o, [&](OutputEnvelope& e, bool table) {
      const std::map<std::string, std::function<qseries::ProofStepResult()>> checks = {
          {"beauty", [&] { return qseries::check_beauty_identity(o.order); }},
          {"jacobi", [&] { return qseries::check_jacobi(o.order); }},
          {"phi-product", [&] { return qseries::check_phi_product(o.order); }},
          {"phi-5dissect", [&] { return qseries::check_phi_5dissection(o.order); }},
          {"phi-f", [&] { return qseries::check_phi_f_identity(o.order); }},
          {"frobenius",
           [&] { return qseries::check_frobenius_congruence(o.k, o.modulus, o.order); }},
      };
      add_steps(e, {checks.at(o.name)()}, table);
    });
  }
  if (command == "replay-k4") {
    return run(command, {{"order", o.order}, {"parallel", parallel}}, o,
               [&](OutputEnvelope& e, bool table) {
                 qseries::ReplayOptions options;
                 options.parallel = parallel;
                 add_steps(e, qseries::replay_k4_proof(o.order, options), table);
               });
  }
  if (command == "residues") {
    return run(command, {{"modulus", o.modulus}, {"target", o.target}}, o,
               [&](OutputEnvelope& e, bool table) {
                 const auto a = qseries::residue_analysis(o.modulus, o.target);
                 e.results.push_back(a);
                 e.ok = a.all_coefficients_vanish();
                 if (!table) return;
                 auto join = [](const std::vector<std::uint64_t>& v) {
                   std::string s;
                   for (const auto x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
                   return "{" + s + "}";
                 };
                 std::cout << "r(r+1)/2 mod " << a.modulus << ": "
                           << join(a.triangular_residues) << "\n"
                           << "s(s+1)   mod " << a.modulus << ": "
                           << join(a.double_triangular_residues) << "\n";
                 for (const auto& w : a.witness_classes) {
                   std::cout << "witness r = " << w.r << ", s = " << w.s
                             << ": (2r+1)(2s+1) = " << w.coefficient_residue << " mod "
                             << a.modulus << "\n";
                 }
               });
  }
  if (command == "oracle") {
    return run(command, {{"k", o.k}, {"n", o.n}, {"modulus", o.modulus}}, o,
               [&](OutputEnvelope& e, bool table) {
                 const auto t = qseries::two_color_table(o.k, o.n);
                 const auto residue = mpz_fdiv_ui(t[o.n].get_mpz_t(), o.modulus);
                 e.results.push_back({{"k", o.k},
                                      {"n", o.n},
                                      {"value", t[o.n].get_str()},
                                      {"modulus", o.modulus},
                                      {"residue", residue}});
                 if (table) {
                   std::cout << "p_" << o.k << "(" << o.n << ") = " << t[o.n].get_str()
                             << " = " << residue << " mod " << o.modulus << "\n";
                 }
               });
  }
  throw std::logic_error("unhandled command " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated q-series verification of mod-5 congruences for 2-color partitions"};
  app.require_subcommand(1);
  Options o;

  const auto format_check = CLI::IsMember({"table", "json"});
  const auto parallel_check = CLI::IsMember({"on", "off"});
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(format_check);
  };

  auto* verify = app.add_subcommand("verify", "Check p_k(25n + 24 - k) = 0 mod m for n <= bound");
  verify->add_option("--k", o.k, "Color parameter")->required()->check(CLI::Range(1, 24));
  verify->add_option("--bound", o.bound, "Largest n checked");
  verify->add_option("--modulus", o.modulus, "Modulus")->check(CLI::Range(2, 1 << 30));
  add_format(verify);

  auto* characterize = app.add_subcommand("characterize", "Verify the family for k = 1..24");
  characterize->add_option("--bound", o.bound, "Largest n checked");
  characterize->add_option("--parallel", o.parallel, "Run the k in parallel")
      ->check(parallel_check);
  add_format(characterize);

  auto* identity = app.add_subcommand("identity", "Check a named series identity");
  identity->add_option("--name", o.name, "Identity name")
      ->required()
      ->check(CLI::IsMember({"beauty", "jacobi", "phi-product", "phi-5dissect", "phi-f",
                             "frobenius"}));
  identity->add_option("--order", o.order, "Truncation order")->check(CLI::PositiveNumber);
  identity->add_option("--k", o.k, "Frobenius: base step k (default 1)");
  identity->add_option("--modulus", o.modulus, "Frobenius: prime modulus");
  add_format(identity);

  auto* replay = app.add_subcommand("replay-k4", "Replay the mod-5 proof for k = 4 step by step");
  replay->add_option("--order", o.order, "Working order after the first 5-dissection");
  replay->add_option("--parallel", o.parallel, "Evaluate steps in parallel")
      ->check(parallel_check);
  add_format(replay);

  auto* strong = app.add_subcommand("strong-5ell", "Check p_{5l}(5m + 4) = 0 mod 5");
  strong->add_option("--ell", o.ell, "l in 1..4 (default: all)")->check(CLI::Range(1, 4));
  strong->add_option("--bound", o.bound, "Largest m checked");
  add_format(strong);

  auto* chan_toh = app.add_subcommand("chan-toh", "Check p_2(5^a n + d_a) = 0 mod 5^floor(a/2)");
  chan_toh->add_option("--alpha", o.alpha, "Exponent a in 2..4")->required()->check(
      CLI::Range(2, 4));
  auto* chan_toh_bound = chan_toh->add_option("--bound", o.bound, "Largest n checked");
  add_format(chan_toh);

  auto* residues = app.add_subcommand("residues", "Residue analysis of r(r+1)/2 + s(s+1)");
  residues->add_option("--modulus", o.modulus, "Modulus")->check(CLI::Range(2, 1 << 20));
  residues->add_option("--target", o.target, "Target residue");
  add_format(residues);

  auto* oracle = app.add_subcommand("oracle", "Print p_k(n) from the partition table");
  oracle->add_option("--k", o.k, "Color parameter")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--n", o.n, "Argument")->required();
  oracle->add_option("--modulus", o.modulus, "Modulus for the residue")
      ->check(CLI::Range(2, 1 << 30));
  add_format(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  if (command == "identity" && identity->count("--k") == 0) o.k = 1;
  if (command == "chan-toh" && chan_toh_bound->count() == 0) {
    o.bound = kDefaultChanTohBound.at(o.alpha);
  }

  try {
    return dispatch(command, o);
  } catch (const qseries::OrderTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
