#include "qseries/ring.hpp"

#include <stdexcept>

namespace qseries {

CoefficientRing CoefficientRing::modulo(std::uint64_t m) {
  if (m < 2) {
    throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(m));
  }
  if (m > kMaxModulus) {
    throw std::invalid_argument("modulus exceeds 2^31: " + std::to_string(m));
  }
  return CoefficientRing{m};
}

Residue CoefficientRing::reduce(const BigInt& value) const {
  if (is_exact()) {
    throw std::logic_error("reduce() called on the exact ring");
  }
  // mpz_fdiv_ui yields the non-negative remainder for negative values too.
  return mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(modulus_));
}

Residue CoefficientRing::reduce(std::int64_t value) const {
  if (is_exact()) {
    throw std::logic_error("reduce() called on the exact ring");
  }
  const auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  return static_cast<Residue>(r);
}

std::optional<Residue> CoefficientRing::inverse(Residue value) const {
  if (is_exact()) {
    throw std::logic_error("inverse() called on the exact ring");
  }
  return mod_inverse(value % modulus_, modulus_);
}

std::string CoefficientRing::name() const {
  return is_exact() ? std::string{"ZZ"} : "Z/" + std::to_string(modulus_);
}

CoefficientRing CoefficientRing::parse(const std::string& text) {
  if (text == "ZZ") return exact();
  if (text.size() > 2 && text.compare(0, 2, "Z/") == 0) {
    std::size_t used = 0;
    const auto m = std::stoull(text.substr(2), &used);
    if (used == text.size() - 2) return modulo(m);
  }
  throw std::invalid_argument("unrecognised coefficient ring: '" + text + "'");
}

std::optional<std::uint64_t> mod_inverse(std::uint64_t value, std::uint64_t modulus) {
  if (modulus == 0) return std::nullopt;
  if (modulus == 1) return 0;
  std::int64_t old_r = static_cast<std::int64_t>(value % modulus);
  std::int64_t r = static_cast<std::int64_t>(modulus);
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t quotient = old_r / r;
    old_r -= quotient * r;
    std::swap(old_r, r);
    old_s -= quotient * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) return std::nullopt;
  const auto m = static_cast<std::int64_t>(modulus);
  std::int64_t x = old_s % m;
  if (x < 0) x += m;
  return static_cast<std::uint64_t>(x);
}

}  // namespace qseries
