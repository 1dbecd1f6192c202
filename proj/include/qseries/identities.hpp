#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

/// One checked congruence between two truncated series.
///
/// `order` is the order to which the step is certified. When a step bundles
/// several comparisons, `lhs`/`rhs` hold the primary pair on success and the
/// failing pair otherwise, and `failed_check` names the failing comparison.
struct ProofStepResult {
  std::string step_id;
  std::string description;
  std::size_t order = 0;
  bool passed = false;
  std::optional<std::size_t> first_mismatch;  // present iff !passed
  std::string failed_check;
  TruncatedSeries lhs;
  TruncatedSeries rhs;

  friend bool operator==(const ProofStepResult&, const ProofStepResult&) = default;
};

/// The requested order cannot support the named step.
class OrderTooSmall : public std::invalid_argument {
 public:
  OrderTooSmall(std::string step_id, const std::string& message)
      : std::invalid_argument(message), step_id_(std::move(step_id)) {}
  const std::string& step_id() const noexcept { return step_id_; }

 private:
  std::string step_id_;
};

bool is_prime(std::uint64_t n);

/// sum p(5n+4) q^n = 5 (q^5;q^5)^5 / (q;q)^6 over ZZ.
ProofStepResult check_beauty_identity(std::size_t order);

/// (q;q)^3 = sum (-1)^n (2n+1) q^{n(n+1)/2} over ZZ.
ProofStepResult check_jacobi(std::size_t order);

/// phi(q) = (q^2;q^2)^5 / ((q;q)^2 (q^4;q^4)^2) over ZZ.
ProofStepResult check_phi_product(std::size_t order);

/// phi(q) = phi(q^25) + 2q f(q^15, q^35) + 2q^4 f(q^5, q^45) over ZZ.
ProofStepResult check_phi_5dissection(std::size_t order);

/// phi(q)^2 - phi(q^5)^2 = 4q f(q^3, q^7) f(q, q^9) over ZZ.
ProofStepResult check_phi_f_identity(std::size_t order);

/// (q^k;q^k)^m = (q^{km};q^{km}) in Z/m, m prime.
ProofStepResult check_frobenius_congruence(std::uint64_t k, std::uint64_t m, std::size_t order);

struct ReplayOptions {
  bool halt_on_failure = true;
  bool parallel = false;
};

inline constexpr std::size_t kReplayMinOrder = 25;
inline constexpr std::size_t kReplaySteps = 14;

/// Replays the mod-5 proof of p_4(25n+20) = 0 as 14 checked steps s1..s14.
///
/// `order` is the working order of the series in q after the first
/// 5-dissection (sum p_4(5n) q^n and B(q)); steps before that dissection run
/// at order 5*order + 4 so that the dissection lands exactly at `order`.
/// The final step certifies (order - 4) / 5 coefficients.
///
/// With halt_on_failure the list ends at the first failing step.
std::vector<ProofStepResult> replay_k4_proof(std::size_t order, ReplayOptions options = {});

}  // namespace qseries
