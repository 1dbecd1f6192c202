#include "qseries/congruence.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace qseries {

namespace {

constexpr std::uint64_t kFamilyStride = 25;
constexpr std::uint64_t kMaxFamilyK = 24;

Progression family_progression(std::uint64_t k) { return {kFamilyStride, 24 - k}; }

void require_family_k(std::uint64_t k) {
  if (k < 1 || k > kMaxFamilyK) {
    throw std::invalid_argument("k must be in 1..24, got " + std::to_string(k));
  }
}

}  // namespace

CongruenceReport check_progression(const PartitionTable& table, Progression progression,
                                   std::uint64_t bound, std::uint64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  if (progression.at(bound) > table.max_n) {
    throw std::invalid_argument("partition table stops at " + std::to_string(table.max_n) +
                                ", progression needs " + std::to_string(progression.at(bound)));
  }
  CongruenceReport report{table.k, modulus, progression, bound, Verdict::HoldsUpTo, {}};
  for (std::uint64_t n = 0; n <= bound; ++n) {
    const std::uint64_t index = progression.at(n);
    const BigInt& value = table.values[index];
    const std::uint64_t residue = mpz_fdiv_ui(value.get_mpz_t(), modulus);
    if (residue != 0) {
      report.verdict = Verdict::Fails;
      report.counterexample = Counterexample{n, index, value, residue};
      break;
    }
  }
  return report;
}

CongruenceReport verify_family(std::uint64_t k, std::uint64_t bound, std::uint64_t modulus) {
  require_family_k(k);
  const Progression progression = family_progression(k);
  return check_progression(two_color_table(k, progression.at(bound)), progression, bound,
                           modulus);
}

std::vector<CongruenceReport> characterize_all(std::uint64_t bound, bool parallel) {
  // k = 1 has the largest offset, so its last index bounds every other k.
  const PartitionTable base = partition_table(family_progression(1).at(bound));
  auto check_one = [&base, bound](std::uint64_t k) {
    const Progression progression = family_progression(k);
    return check_progression(two_color_table(base, k, progression.at(bound)), progression, bound,
                             5);
  };

  std::vector<CongruenceReport> reports;
  reports.reserve(kMaxFamilyK);
  if (!parallel) {
    for (std::uint64_t k = 1; k <= kMaxFamilyK; ++k) reports.push_back(check_one(k));
    return reports;
  }
  std::vector<std::future<CongruenceReport>> pending;
  pending.reserve(kMaxFamilyK);
  for (std::uint64_t k = 1; k <= kMaxFamilyK; ++k) {
    pending.push_back(std::async(std::launch::async, check_one, k));
  }
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

CongruenceReport verify_strong_5ell(std::uint64_t ell, std::uint64_t bound) {
  if (ell < 1 || ell > 4) {
    throw std::invalid_argument("ell must be in 1..4, got " + std::to_string(ell));
  }
  const Progression progression{5, 4};
  return check_progression(two_color_table(5 * ell, progression.at(bound)), progression, bound,
                           5);
}

std::uint64_t power_of_five(unsigned e) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / 5) {
      throw std::overflow_error("5^" + std::to_string(e) + " does not fit in 64 bits");
    }
    result *= 5;
  }
  return result;
}

std::uint64_t delta_alpha(unsigned alpha) {
  if (alpha < 1 || alpha > 26) {
    throw std::invalid_argument("alpha must be in 1..26, got " + std::to_string(alpha));
  }
  const auto inverse = mod_inverse(8, power_of_five(alpha));
  // 8 is coprime to every power of 5.
  return *inverse;
}

CongruenceReport verify_chan_toh(unsigned alpha, std::uint64_t bound) {
  if (alpha < 2) {
    throw std::invalid_argument("alpha must be at least 2, got " + std::to_string(alpha));
  }
  const Progression progression{power_of_five(alpha), delta_alpha(alpha)};
  const std::uint64_t modulus = power_of_five(alpha / 2);
  return check_progression(two_color_table(2, progression.at(bound)), progression, bound,
                           modulus);
}

bool ResidueAnalysis::all_coefficients_vanish() const {
  return std::all_of(witness_classes.begin(), witness_classes.end(),
                     [](const WitnessClass& w) { return w.coefficient_residue == 0; });
}

ResidueAnalysis residue_analysis(std::uint64_t modulus, std::uint64_t target) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  if (target >= modulus) {
    throw std::invalid_argument("target must be a residue below the modulus");
  }
  // s(s+1) mod m has period m; r(r+1)/2 mod m has period m for odd m, 2m for even m.
  const std::uint64_t tri_period = modulus % 2 == 1 ? modulus : 2 * modulus;
  auto tri = [modulus](std::uint64_t r) { return (r * (r + 1) / 2) % modulus; };
  auto dbl = [modulus](std::uint64_t s) { return (s * (s + 1)) % modulus; };

  std::set<std::uint64_t> triangular;
  std::set<std::uint64_t> doubled;
  for (std::uint64_t r = 0; r < tri_period; ++r) triangular.insert(tri(r));
  for (std::uint64_t s = 0; s < modulus; ++s) doubled.insert(dbl(s));

  ResidueAnalysis analysis{modulus, target, tri_period,
                           {triangular.begin(), triangular.end()},
                           {doubled.begin(), doubled.end()},
                           {}};
  for (std::uint64_t r = 0; r < tri_period; ++r) {
    for (std::uint64_t s = 0; s < modulus; ++s) {
      if ((tri(r) + dbl(s)) % modulus != target) continue;
      analysis.witness_classes.push_back({r, s, ((2 * r + 1) * (2 * s + 1)) % modulus});
    }
  }
  return analysis;
}

}  // namespace qseries
