#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qseries/ring.hpp"

namespace qseries {

/// Thrown for precondition violations on series operations (ring mismatch,
/// out-of-range exponents, non-unit constant terms, ...).
class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A power series in q known exactly for exponents 0..order.
///
/// Storage is dense: `order() + 1` coefficients, arbitrary-precision
/// integers for the exact ring and reduced machine residues for Z/m.
/// Values are immutable; every operation returns a new series.
class TruncatedSeries {
 public:
  using ExactCoeffs = std::vector<BigInt>;
  using ResidueCoeffs = std::vector<Residue>;
  using Storage = std::variant<ExactCoeffs, ResidueCoeffs>;

  /// The exact zero series of order 0.
  TruncatedSeries() : TruncatedSeries(CoefficientRing::exact(), 0) {}

  /// The zero series to the given order.
  TruncatedSeries(CoefficientRing ring, std::size_t order);

  /// Coefficients are reduced when the ring is Z/m. `coeffs` must be non-empty;
  /// the order is coeffs.size() - 1.
  TruncatedSeries(CoefficientRing ring, std::vector<BigInt> coeffs);

  /// Residues must already lie in [0, m-1].
  TruncatedSeries(CoefficientRing ring, ResidueCoeffs residues);

  static TruncatedSeries one(CoefficientRing ring, std::size_t order);

  const CoefficientRing& ring() const noexcept { return ring_; }
  std::size_t order() const noexcept { return order_; }

  BigInt coeff(std::size_t exponent) const;
  std::vector<BigInt> coefficients() const;
  bool is_zero() const;

  const Storage& storage() const noexcept { return coeffs_; }
  const ExactCoeffs& exact_coeffs() const;
  const ResidueCoeffs& residues() const;

  /// Human-readable rendering, e.g. "1 - q - q^2 + O(q^8)".
  std::string to_string(std::size_t max_terms = 12) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  CoefficientRing ring_;
  std::size_t order_;
  Storage coeffs_;
};

/// Builds a series from sparse (exponent, value) terms.
TruncatedSeries make(CoefficientRing ring, std::size_t order,
                     std::span<const std::pair<std::size_t, BigInt>> terms);
TruncatedSeries make(CoefficientRing ring, std::size_t order,
                     std::initializer_list<std::pair<std::size_t, long>> terms);

// Binary operations require equal rings and truncate to the smaller order.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries scale(const TruncatedSeries& a, const BigInt& factor);

/// Multiplies by q^r, keeping the order (coefficients shifted past it are dropped).
TruncatedSeries shift(const TruncatedSeries& a, std::size_t r);

/// Drops coefficients above `order`.
TruncatedSeries truncate(const TruncatedSeries& a, std::size_t order);

/// Multiplicative inverse via the triangular recurrence
///   b0 = a0^-1,  bn = -a0^-1 * sum_{i=1..n} a_i b_{n-i}.
/// The constant term must be a unit (+-1 over ZZ, coprime to m over Z/m).
TruncatedSeries invert(const TruncatedSeries& a);

/// a^e by repeated squaring; a^0 = 1 for every a.
TruncatedSeries pow(const TruncatedSeries& a, std::uint64_t e);

/// q -> q^k. The result keeps a.order() unless `order` is given, in which
/// case it may extend up to k*(a.order()+1) - 1, the largest order still
/// determined by the known source coefficients.
TruncatedSeries substitute_power(const TruncatedSeries& a, std::size_t k,
                                 std::optional<std::size_t> order = std::nullopt);

/// b[n] = a[m*n + r], order (a.order() - r) / m.
TruncatedSeries dissect(const TruncatedSeries& a, std::size_t m, std::size_t r);

/// q -> -q.
TruncatedSeries negate_variable(const TruncatedSeries& a);

/// Image of an exact series in Z/m.
TruncatedSeries reduce_mod(const TruncatedSeries& a, std::uint64_t m);

struct OrderComparison {
  bool equal = true;
  std::optional<std::size_t> first_difference;

  explicit operator bool() const noexcept { return equal; }
};

/// Compares coefficients 0..t. Requires t <= min(a.order(), b.order()).
OrderComparison equal_to_order(const TruncatedSeries& a, const TruncatedSeries& b,
                               std::size_t t);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return sub(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return mul(a, b);
}

}  // namespace qseries
