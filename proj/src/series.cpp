#include "qseries/series.hpp"

#include <algorithm>
#include <sstream>

namespace qseries {

namespace {

using ExactCoeffs = TruncatedSeries::ExactCoeffs;
using ResidueCoeffs = TruncatedSeries::ResidueCoeffs;

void require_same_ring(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
  if (a.ring() != b.ring()) {
    throw SeriesError(std::string{op} + ": ring mismatch (" + a.ring().name() + " vs " +
                      b.ring().name() + ")");
  }
}

// Modular helpers; m <= 2^31, so sums and products of residues fit in 64 bits.
inline Residue add_mod(Residue x, Residue y, Residue m) {
  const Residue s = x + y;
  return s >= m ? s - m : s;
}
inline Residue sub_mod(Residue x, Residue y, Residue m) { return x >= y ? x - y : x + m - y; }
inline Residue mul_mod(Residue x, Residue y, Residue m) { return (x * y) % m; }

template <class Coeffs>
Coeffs prefix(const Coeffs& c, std::size_t order) {
  return Coeffs(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(order + 1));
}

ExactCoeffs mul_exact(const ExactCoeffs& a, const ExactCoeffs& b, std::size_t order) {
  ExactCoeffs c(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return c;
}

ResidueCoeffs mul_residue(const ResidueCoeffs& a, const ResidueCoeffs& b, std::size_t order,
                          Residue m) {
  ResidueCoeffs c(order + 1, 0);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b[j] == 0) continue;
      c[i + j] = (c[i + j] + a[i] * b[j]) % m;
    }
  }
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(CoefficientRing ring, std::size_t order)
    : ring_(ring), order_(order) {
  if (ring_.is_exact()) {
    coeffs_ = ExactCoeffs(order + 1);
  } else {
    coeffs_ = ResidueCoeffs(order + 1, 0);
  }
}

TruncatedSeries::TruncatedSeries(CoefficientRing ring, std::vector<BigInt> coeffs)
    : ring_(ring), order_(coeffs.empty() ? 0 : coeffs.size() - 1) {
  if (coeffs.empty()) {
    throw SeriesError("a series needs at least one coefficient");
  }
  if (ring_.is_exact()) {
    coeffs_ = std::move(coeffs);
  } else {
    ResidueCoeffs r(coeffs.size());
    std::transform(coeffs.begin(), coeffs.end(), r.begin(),
                   [&](const BigInt& v) { return ring_.reduce(v); });
    coeffs_ = std::move(r);
  }
}

TruncatedSeries::TruncatedSeries(CoefficientRing ring, ResidueCoeffs residues)
    : ring_(ring), order_(residues.empty() ? 0 : residues.size() - 1) {
  if (residues.empty()) {
    throw SeriesError("a series needs at least one coefficient");
  }
  if (ring_.is_exact()) {
    throw SeriesError("residue storage requires a Z/m ring");
  }
  for (const Residue r : residues) {
    if (r >= ring_.modulus()) {
      throw SeriesError("residue " + std::to_string(r) + " out of range for " + ring_.name());
    }
  }
  coeffs_ = std::move(residues);
}

TruncatedSeries TruncatedSeries::one(CoefficientRing ring, std::size_t order) {
  return make(ring, order, {{0, 1}});
}

BigInt TruncatedSeries::coeff(std::size_t exponent) const {
  if (exponent > order_) {
    throw SeriesError("exponent " + std::to_string(exponent) + " beyond order " +
                      std::to_string(order_));
  }
  if (const auto* exact = std::get_if<ExactCoeffs>(&coeffs_)) {
    return (*exact)[exponent];
  }
  return BigInt{static_cast<unsigned long>(std::get<ResidueCoeffs>(coeffs_)[exponent])};
}

std::vector<BigInt> TruncatedSeries::coefficients() const {
  std::vector<BigInt> out;
  out.reserve(order_ + 1);
  for (std::size_t i = 0; i <= order_; ++i) out.push_back(coeff(i));
  return out;
}

bool TruncatedSeries::is_zero() const {
  return std::visit(
      [](const auto& c) {
        return std::all_of(c.begin(), c.end(), [](const auto& v) { return v == 0; });
      },
      coeffs_);
}

const ExactCoeffs& TruncatedSeries::exact_coeffs() const {
  if (!ring_.is_exact()) throw SeriesError("series is not over the exact ring");
  return std::get<ExactCoeffs>(coeffs_);
}

const ResidueCoeffs& TruncatedSeries::residues() const {
  if (ring_.is_exact()) throw SeriesError("series is over the exact ring");
  return std::get<ResidueCoeffs>(coeffs_);
}

std::string TruncatedSeries::to_string(std::size_t max_terms) const {
  std::ostringstream out;
  std::size_t written = 0;
  for (std::size_t i = 0; i <= order_ && written < max_terms; ++i) {
    const BigInt c = coeff(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = abs(c);
    if (written == 0) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    if (i == 0) {
      out << magnitude.get_str();
    } else {
      if (magnitude != 1) out << magnitude.get_str() << "*";
      out << "q";
      if (i > 1) out << "^" << i;
    }
    ++written;
  }
  if (written == 0) out << "0";
  out << " + O(q^" << (order_ + 1) << ")";
  if (!ring_.is_exact()) out << " mod " << ring_.modulus();
  return out.str();
}

// ---------------------------------------------------------------------------
// Construction

TruncatedSeries make(CoefficientRing ring, std::size_t order,
                     std::span<const std::pair<std::size_t, BigInt>> terms) {
  std::vector<BigInt> coeffs(order + 1);
  std::vector<bool> seen(order + 1, false);
  for (const auto& [exponent, value] : terms) {
    if (exponent > order) {
      throw SeriesError("make: exponent " + std::to_string(exponent) + " exceeds order " +
                        std::to_string(order));
    }
    if (seen[exponent]) {
      throw SeriesError("make: duplicate exponent " + std::to_string(exponent));
    }
    seen[exponent] = true;
    coeffs[exponent] = value;
  }
  return TruncatedSeries{ring, std::move(coeffs)};
}

TruncatedSeries make(CoefficientRing ring, std::size_t order,
                     std::initializer_list<std::pair<std::size_t, long>> terms) {
  std::vector<std::pair<std::size_t, BigInt>> big;
  big.reserve(terms.size());
  for (const auto& [e, v] : terms) big.emplace_back(e, BigInt{v});
  return make(ring, order, std::span<const std::pair<std::size_t, BigInt>>{big});
}

// ---------------------------------------------------------------------------
// Ring operations

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_ring(a, b, "add");
  const std::size_t order = std::min(a.order(), b.order());
  if (a.ring().is_exact()) {
    ExactCoeffs c = prefix(a.exact_coeffs(), order);
    const auto& y = b.exact_coeffs();
    for (std::size_t i = 0; i <= order; ++i) c[i] += y[i];
    return TruncatedSeries{a.ring(), std::move(c)};
  }
  const Residue m = a.ring().modulus();
  ResidueCoeffs c = prefix(a.residues(), order);
  const auto& y = b.residues();
  for (std::size_t i = 0; i <= order; ++i) c[i] = add_mod(c[i], y[i], m);
  return TruncatedSeries{a.ring(), std::move(c)};
}

TruncatedSeries negate(const TruncatedSeries& a) {
  if (a.ring().is_exact()) {
    ExactCoeffs c = a.exact_coeffs();
    for (auto& v : c) v = -v;
    return TruncatedSeries{a.ring(), std::move(c)};
  }
  const Residue m = a.ring().modulus();
  ResidueCoeffs c = a.residues();
  for (auto& v : c) v = sub_mod(0, v, m);
  return TruncatedSeries{a.ring(), std::move(c)};
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_ring(a, b, "sub");
  return add(a, negate(b));
}

TruncatedSeries scale(const TruncatedSeries& a, const BigInt& factor) {
  if (a.ring().is_exact()) {
    ExactCoeffs c = a.exact_coeffs();
    for (auto& v : c) v *= factor;
    return TruncatedSeries{a.ring(), std::move(c)};
  }
  const Residue m = a.ring().modulus();
  const Residue f = a.ring().reduce(factor);
  ResidueCoeffs c = a.residues();
  for (auto& v : c) v = mul_mod(v, f, m);
  return TruncatedSeries{a.ring(), std::move(c)};
}

TruncatedSeries shift(const TruncatedSeries& a, std::size_t r) {
  return std::visit(
      [&](const auto& src) {
        using Coeffs = std::decay_t<decltype(src)>;
        Coeffs c(src.size());
        for (std::size_t i = r; i <= a.order(); ++i) c[i] = src[i - r];
        return TruncatedSeries{a.ring(), std::move(c)};
      },
      a.storage());
}

TruncatedSeries truncate(const TruncatedSeries& a, std::size_t order) {
  if (order > a.order()) {
    throw SeriesError("truncate: order " + std::to_string(order) + " exceeds series order " +
                      std::to_string(a.order()));
  }
  return std::visit(
      [&](const auto& src) { return TruncatedSeries{a.ring(), prefix(src, order)}; },
      a.storage());
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_ring(a, b, "mul");
  const std::size_t order = std::min(a.order(), b.order());
  if (a.ring().is_exact()) {
    return TruncatedSeries{a.ring(), mul_exact(a.exact_coeffs(), b.exact_coeffs(), order)};
  }
  return TruncatedSeries{a.ring(),
                         mul_residue(a.residues(), b.residues(), order, a.ring().modulus())};
}

TruncatedSeries invert(const TruncatedSeries& a) {
  const std::size_t n = a.order();
  if (a.ring().is_exact()) {
    const auto& x = a.exact_coeffs();
    if (x[0] != 1 && x[0] != -1) {
      throw SeriesError("invert: constant term " + x[0].get_str() + " is not a unit in ZZ");
    }
    // a0 = +-1 is its own inverse.
    const bool negative_unit = x[0] < 0;
    ExactCoeffs y(n + 1);
    y[0] = x[0];
    BigInt acc;
    for (std::size_t k = 1; k <= n; ++k) {
      acc = 0;
      for (std::size_t i = 1; i <= k; ++i) {
        if (sgn(x[i]) == 0) continue;
        mpz_addmul(acc.get_mpz_t(), x[i].get_mpz_t(), y[k - i].get_mpz_t());
      }
      y[k] = negative_unit ? BigInt{acc} : BigInt{-acc};
    }
    return TruncatedSeries{a.ring(), std::move(y)};
  }

  const Residue m = a.ring().modulus();
  const auto& x = a.residues();
  const auto inv0 = a.ring().inverse(x[0]);
  if (!inv0) {
    throw SeriesError("invert: constant term " + std::to_string(x[0]) + " is not a unit in " +
                      a.ring().name());
  }
  const Residue neg_inv0 = sub_mod(0, *inv0, m);
  ResidueCoeffs y(n + 1, 0);
  y[0] = *inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Residue acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (x[i] == 0) continue;
      acc = (acc + x[i] * y[k - i]) % m;
    }
    y[k] = mul_mod(acc, neg_inv0, m);
  }
  return TruncatedSeries{a.ring(), std::move(y)};
}

TruncatedSeries pow(const TruncatedSeries& a, std::uint64_t e) {
  TruncatedSeries result = TruncatedSeries::one(a.ring(), a.order());
  if (e == 0) return result;
  TruncatedSeries base = a;
  while (true) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e == 0) break;
    base = mul(base, base);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Variable transformations

TruncatedSeries substitute_power(const TruncatedSeries& a, std::size_t k,
                                 std::optional<std::size_t> order) {
  if (k == 0) throw SeriesError("substitute_power: k must be positive");
  const std::size_t target = order.value_or(a.order());
  const std::size_t limit = k * (a.order() + 1) - 1;
  if (target > limit) {
    throw SeriesError("substitute_power: order " + std::to_string(target) +
                      " is not determined by a source of order " + std::to_string(a.order()) +
                      " (max " + std::to_string(limit) + ")");
  }
  return std::visit(
      [&](const auto& src) {
        using Coeffs = std::decay_t<decltype(src)>;
        Coeffs c(target + 1);
        for (std::size_t i = 0; i * k <= target; ++i) c[i * k] = src[i];
        return TruncatedSeries{a.ring(), std::move(c)};
      },
      a.storage());
}

TruncatedSeries dissect(const TruncatedSeries& a, std::size_t m, std::size_t r) {
  if (m == 0) throw SeriesError("dissect: modulus must be positive");
  if (r >= m) {
    throw SeriesError("dissect: residue " + std::to_string(r) + " must be below " +
                      std::to_string(m));
  }
  if (r > a.order()) {
    throw SeriesError("dissect: residue " + std::to_string(r) + " beyond series order " +
                      std::to_string(a.order()));
  }
  const std::size_t order = (a.order() - r) / m;
  return std::visit(
      [&](const auto& src) {
        using Coeffs = std::decay_t<decltype(src)>;
        Coeffs c(order + 1);
        for (std::size_t n = 0; n <= order; ++n) c[n] = src[m * n + r];
        return TruncatedSeries{a.ring(), std::move(c)};
      },
      a.storage());
}

TruncatedSeries negate_variable(const TruncatedSeries& a) {
  if (a.ring().is_exact()) {
    ExactCoeffs c = a.exact_coeffs();
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return TruncatedSeries{a.ring(), std::move(c)};
  }
  const Residue m = a.ring().modulus();
  ResidueCoeffs c = a.residues();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = sub_mod(0, c[i], m);
  return TruncatedSeries{a.ring(), std::move(c)};
}

TruncatedSeries reduce_mod(const TruncatedSeries& a, std::uint64_t m) {
  if (!a.ring().is_exact()) {
    throw SeriesError("reduce_mod: expected an exact series, got one over " + a.ring().name());
  }
  return TruncatedSeries{CoefficientRing::modulo(m), a.exact_coeffs()};
}

OrderComparison equal_to_order(const TruncatedSeries& a, const TruncatedSeries& b,
                               std::size_t t) {
  require_same_ring(a, b, "equal_to_order");
  if (t > std::min(a.order(), b.order())) {
    throw SeriesError("equal_to_order: order " + std::to_string(t) + " exceeds min order " +
                      std::to_string(std::min(a.order(), b.order())));
  }
  return std::visit(
      [&](const auto& x) {
        using Coeffs = std::decay_t<decltype(x)>;
        const auto& y = std::get<Coeffs>(b.storage());
        for (std::size_t i = 0; i <= t; ++i) {
          if (x[i] != y[i]) return OrderComparison{false, i};
        }
        return OrderComparison{true, std::nullopt};
      },
      a.storage());
}

}  // namespace qseries
