#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qseries/partitions.hpp"

namespace qseries {

/// Indices stride*n + offset.
struct Progression {
  std::uint64_t stride = 25;
  std::uint64_t offset = 0;

  std::uint64_t at(std::uint64_t n) const noexcept { return stride * n + offset; }
  friend bool operator==(const Progression&, const Progression&) = default;
};

struct Counterexample {
  std::uint64_t n = 0;
  std::uint64_t index = 0;  // progression.at(n)
  BigInt value;             // exact p_k(index)
  std::uint64_t residue = 0;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

enum class Verdict { HoldsUpTo, Fails };

/// Outcome of checking p_k(stride*n + offset) = 0 (mod modulus) for n = 0..bound.
struct CongruenceReport {
  std::uint64_t k = 0;
  std::uint64_t modulus = 5;
  Progression progression;
  std::uint64_t bound = 0;
  Verdict verdict = Verdict::HoldsUpTo;
  std::optional<Counterexample> counterexample;  // present iff verdict == Fails

  bool holds() const noexcept { return verdict == Verdict::HoldsUpTo; }
  friend bool operator==(const CongruenceReport&, const CongruenceReport&) = default;
};

/// Checks a progression against a precomputed table; the table must reach
/// progression.at(bound). The first failing n is recorded.
CongruenceReport check_progression(const PartitionTable& table, Progression progression,
                                   std::uint64_t bound, std::uint64_t modulus);

/// p_k(25n + 24 - k) = 0 (mod modulus) for n = 0..bound, 1 <= k <= 24.
CongruenceReport verify_family(std::uint64_t k, std::uint64_t bound, std::uint64_t modulus = 5);

/// verify_family for k = 1..24, ordered by k. The ordinary partition table is
/// shared; with `parallel` the per-k checks run on separate threads.
std::vector<CongruenceReport> characterize_all(std::uint64_t bound, bool parallel = false);

/// p_{5l}(5m + 4) = 0 (mod 5) for m = 0..bound, l in {1, 2, 3, 4}.
CongruenceReport verify_strong_5ell(std::uint64_t ell, std::uint64_t bound);

/// The inverse of 8 modulo 5^alpha, in [1, 5^alpha - 1]. 1 <= alpha <= 26.
std::uint64_t delta_alpha(unsigned alpha);

/// 5^e; throws if it does not fit in 64 bits.
std::uint64_t power_of_five(unsigned e);

/// p_2(5^alpha n + delta_alpha) = 0 (mod 5^floor(alpha/2)) for n = 0..bound, alpha >= 2.
CongruenceReport verify_chan_toh(unsigned alpha, std::uint64_t bound);

struct WitnessClass {
  std::uint64_t r = 0;  // r mod triangular_period
  std::uint64_t s = 0;  // s mod modulus
  std::uint64_t coefficient_residue = 0;  // (2r+1)(2s+1) mod modulus

  friend bool operator==(const WitnessClass&, const WitnessClass&) = default;
};

/// Residues of r(r+1)/2 and s(s+1) over one period, and every class
/// (r, s) with r(r+1)/2 + s(s+1) = target (mod modulus).
///
/// s(s+1) is periodic mod `modulus`; r(r+1)/2 is too when the modulus is odd
/// and has period 2*modulus otherwise, so r is reported mod that period.
struct ResidueAnalysis {
  std::uint64_t modulus = 5;
  std::uint64_t target = 4;
  std::uint64_t triangular_period = 5;
  std::vector<std::uint64_t> triangular_residues;         // sorted, distinct
  std::vector<std::uint64_t> double_triangular_residues;  // sorted, distinct
  std::vector<WitnessClass> witness_classes;              // sorted by (r, s)

  /// Every witness class has coefficient residue 0.
  bool all_coefficients_vanish() const;
  friend bool operator==(const ResidueAnalysis&, const ResidueAnalysis&) = default;
};

ResidueAnalysis residue_analysis(std::uint64_t modulus = 5, std::uint64_t target = 4);

}  // namespace qseries
