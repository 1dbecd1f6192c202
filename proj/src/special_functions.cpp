#include "qseries/special_functions.hpp"

#include <vector>

namespace qseries {

namespace {

// Adds `value` at `exponent` of a dense exact accumulator.
void accumulate(std::vector<BigInt>& coeffs, std::uint64_t exponent, long value) {
  coeffs[exponent] += value;
}

}  // namespace

std::uint64_t ThetaSpec::exponent(std::int64_t j) const {
  // j(j+1)/2 and j(j-1)/2 are non-negative for every integer j.
  const auto tri_plus = static_cast<std::uint64_t>(j * (j + 1) / 2);
  const auto tri_minus = static_cast<std::uint64_t>(j * (j - 1) / 2);
  return u * tri_plus + v * tri_minus;
}

TruncatedSeries pochhammer_progression(std::uint64_t offset, std::uint64_t step,
                                       CoefficientRing ring, std::size_t order) {
  if (offset == 0 || step == 0) {
    throw SeriesError("pochhammer_progression: offset and step must be positive");
  }
  // Multiply in one factor (1 - q^e) at a time; truncation is implicit since
  // only exponents <= order are stored.
  if (ring.is_exact()) {
    std::vector<BigInt> c(order + 1);
    c[0] = 1;
    for (std::uint64_t e = offset; e <= order; e += step) {
      for (std::size_t n = order; n >= e; --n) c[n] -= c[n - e];
    }
    return TruncatedSeries{ring, std::move(c)};
  }
  const Residue m = ring.modulus();
  std::vector<Residue> c(order + 1, 0);
  c[0] = 1 % m;
  for (std::uint64_t e = offset; e <= order; e += step) {
    for (std::size_t n = order; n >= e; --n) {
      c[n] = c[n] >= c[n - e] ? c[n] - c[n - e] : c[n] + m - c[n - e];
    }
  }
  return TruncatedSeries{ring, std::move(c)};
}

TruncatedSeries pochhammer(std::uint64_t k, CoefficientRing ring, std::size_t order) {
  if (k == 0) throw SeriesError("pochhammer: step must be positive");
  return pochhammer_progression(k, k, ring, order);
}

TruncatedSeries theta_f(const ThetaSpec& spec, CoefficientRing ring, std::size_t order) {
  if (spec.u == 0 || spec.v == 0) {
    throw SeriesError("theta_f: u and v must be positive");
  }
  std::vector<BigInt> c(order + 1);
  // Walk outward from j = 0 in each direction; stop after two consecutive
  // exponents beyond the order.
  for (const std::int64_t direction : {1, -1}) {
    int misses = 0;
    for (std::int64_t j = direction > 0 ? 0 : -1; misses < 2; j += direction) {
      const std::uint64_t e = spec.exponent(j);
      if (e > order) {
        ++misses;
        continue;
      }
      misses = 0;
      accumulate(c, e, 1);
    }
  }
  return TruncatedSeries{ring, std::move(c)};
}

TruncatedSeries phi(CoefficientRing ring, std::size_t order) {
  return theta_f(ThetaSpec{1, 1}, ring, order);
}

TruncatedSeries phi_product(CoefficientRing ring, std::size_t order) {
  const auto p1 = pochhammer(1, ring, order);
  const auto p2 = pochhammer(2, ring, order);
  const auto p4 = pochhammer(4, ring, order);
  return pow(p2, 5) * invert(pow(p1, 2) * pow(p4, 2));
}

TruncatedSeries jacobi_cube(CoefficientRing ring, std::size_t order) {
  std::vector<BigInt> c(order + 1);
  for (std::uint64_t n = 0; n * (n + 1) / 2 <= order; ++n) {
    const long term = static_cast<long>(2 * n + 1);
    accumulate(c, n * (n + 1) / 2, n % 2 == 0 ? term : -term);
  }
  return TruncatedSeries{ring, std::move(c)};
}

}  // namespace qseries
