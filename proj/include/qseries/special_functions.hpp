#pragma once

#include <cstddef>
#include <cstdint>

#include "qseries/series.hpp"

namespace qseries {

/// Monomial arguments of Ramanujan's theta function: f(q^u, q^v).
struct ThetaSpec {
  std::uint64_t u = 1;
  std::uint64_t v = 1;

  /// u*j(j+1)/2 + v*j(j-1)/2, always an integer.
  std::uint64_t exponent(std::int64_t j) const;
};

/// (q^k; q^k)_inf = prod_{l>=1} (1 - q^{k l}) to the given order.
TruncatedSeries pochhammer(std::uint64_t k, CoefficientRing ring, std::size_t order);

/// prod_{l>=0} (1 - q^{offset + step*l}), e.g. (q; q^2)_inf for offset 1, step 2.
TruncatedSeries pochhammer_progression(std::uint64_t offset, std::uint64_t step,
                                       CoefficientRing ring, std::size_t order);

/// f(q^u, q^v) = sum_{j in Z} q^{u j(j+1)/2 + v j(j-1)/2}.
TruncatedSeries theta_f(const ThetaSpec& spec, CoefficientRing ring, std::size_t order);

/// phi(q) = f(q, q) = sum_{j in Z} q^{j^2}.
TruncatedSeries phi(CoefficientRing ring, std::size_t order);

/// phi(q) through its product form (q^2;q^2)^5 / ((q;q)^2 (q^4;q^4)^2).
TruncatedSeries phi_product(CoefficientRing ring, std::size_t order);

/// sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2}, the expansion of (q;q)_inf^3.
TruncatedSeries jacobi_cube(CoefficientRing ring, std::size_t order);

}  // namespace qseries
