#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "qseries/series.hpp"

namespace testing {

inline const qseries::CoefficientRing ZZ = qseries::CoefficientRing::exact();
inline const qseries::CoefficientRing F5 = qseries::CoefficientRing::modulo(5);

inline std::vector<long> longs(const qseries::TruncatedSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coefficients()) out.push_back(c.get_si());
  return out;
}

inline qseries::TruncatedSeries series(qseries::CoefficientRing ring,
                                       const std::vector<long>& coeffs) {
  std::vector<qseries::BigInt> big;
  for (const auto c : coeffs) big.emplace_back(c);
  return qseries::TruncatedSeries{ring, std::move(big)};
}

/// Random exact series with small coefficients; the constant term is forced
/// to +-1 when `unit` is set.
inline qseries::TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order,
                                              bool unit = false) {
  auto p = oracle::random_poly(rng, order, 9);
  if (unit) p[0] = (rng() & 1U) ? 1 : -1;
  return series(ZZ, p);
}

}  // namespace testing
