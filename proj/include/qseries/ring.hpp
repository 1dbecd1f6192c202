#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace qseries {

using BigInt = mpz_class;
using Residue = std::uint64_t;

/// Coefficient ring of a truncated series: the exact integers, or Z/mZ.
///
/// Residues are kept in [0, m-1] as machine words. Moduli are limited to
/// 2^31 so that a product of two residues fits in 64 bits.
class CoefficientRing {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

  static CoefficientRing exact() noexcept { return CoefficientRing{0}; }
  static CoefficientRing modulo(std::uint64_t m);

  bool is_exact() const noexcept { return modulus_ == 0; }

  /// 0 for the exact ring.
  std::uint64_t modulus() const noexcept { return modulus_; }

  Residue reduce(const BigInt& value) const;
  Residue reduce(std::int64_t value) const;

  /// Multiplicative inverse of a residue, if it is a unit.
  std::optional<Residue> inverse(Residue value) const;

  /// "ZZ" or "Z/m".
  std::string name() const;

  /// Parses the format produced by name().
  static CoefficientRing parse(const std::string& text);

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  explicit constexpr CoefficientRing(std::uint64_t m) noexcept : modulus_(m) {}

  std::uint64_t modulus_ = 0;
};

/// Extended Euclid: inverse of `value` modulo `modulus`, if gcd = 1.
std::optional<std::uint64_t> mod_inverse(std::uint64_t value, std::uint64_t modulus);

}  // namespace qseries
