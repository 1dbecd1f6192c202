#include "qseries/identities.hpp"

#include <functional>
#include <future>

#include "qseries/partitions.hpp"
#include "qseries/special_functions.hpp"

namespace qseries {

namespace {

const CoefficientRing kZZ = CoefficientRing::exact();

struct Comparison {
  std::string label;
  TruncatedSeries lhs;
  TruncatedSeries rhs;
};

// The first comparison is the step's primary claim; the rest are sub-checks
// that must hold as well. Every comparison runs to the shared step order.
ProofStepResult evaluate(std::string step_id, std::string description, std::size_t order,
                         std::vector<Comparison> comparisons) {
  ProofStepResult result;
  result.step_id = std::move(step_id);
  result.description = std::move(description);
  result.order = order;
  result.passed = true;
  for (auto& c : comparisons) {
    const auto cmp = equal_to_order(c.lhs, c.rhs, order);
    if (!cmp.equal) {
      result.passed = false;
      result.first_mismatch = cmp.first_difference;
      result.failed_check = c.label;
      result.lhs = truncate(c.lhs, order);
      result.rhs = truncate(c.rhs, order);
      return result;
    }
  }
  result.lhs = truncate(comparisons.front().lhs, order);
  result.rhs = truncate(comparisons.front().rhs, order);
  return result;
}

void require_positive_order(std::size_t order, const char* what) {
  if (order < 1) {
    throw std::invalid_argument(std::string{what} + ": order must be at least 1");
  }
}

// x(q^k) where x is supplied as a constructor taking an order; only the
// coefficients needed to reach `order` are built.
TruncatedSeries in_power(const std::function<TruncatedSeries(std::size_t)>& build,
                         std::size_t k, std::size_t order) {
  return substitute_power(build(order / k), k, order);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Named identities (exact integers)

ProofStepResult check_beauty_identity(std::size_t order) {
  require_positive_order(order, "check_beauty_identity");
  const auto partitions = invert(pochhammer(1, kZZ, 5 * order + 4));
  const auto lhs = dissect(partitions, 5, 4);
  const auto p1 = pochhammer(1, kZZ, order);
  const auto rhs = scale(pow(pochhammer(5, kZZ, order), 5) * invert(pow(p1, 6)), 5);
  return evaluate("beauty", "sum p(5n+4) q^n = 5 (q^5;q^5)^5 / (q;q)^6", order,
                  {{"beauty", lhs, rhs}});
}

ProofStepResult check_jacobi(std::size_t order) {
  require_positive_order(order, "check_jacobi");
  return evaluate("jacobi", "(q;q)^3 = sum (-1)^n (2n+1) q^(n(n+1)/2)", order,
                  {{"jacobi", pow(pochhammer(1, kZZ, order), 3), jacobi_cube(kZZ, order)}});
}

ProofStepResult check_phi_product(std::size_t order) {
  require_positive_order(order, "check_phi_product");
  return evaluate("phi-product", "phi(q) = (q^2;q^2)^5 / ((q;q)^2 (q^4;q^4)^2)", order,
                  {{"phi-product", phi(kZZ, order), phi_product(kZZ, order)}});
}

ProofStepResult check_phi_5dissection(std::size_t order) {
  require_positive_order(order, "check_phi_5dissection");
  const auto phi25 = in_power([](std::size_t n) { return phi(kZZ, n); }, 25, order);
  const auto rhs = phi25 + scale(shift(theta_f({15, 35}, kZZ, order), 1), 2) +
                   scale(shift(theta_f({5, 45}, kZZ, order), 4), 2);
  return evaluate("phi-5dissect", "phi(q) = phi(q^25) + 2q f(q^15,q^35) + 2q^4 f(q^5,q^45)",
                  order, {{"phi-5dissect", phi(kZZ, order), rhs}});
}

ProofStepResult check_phi_f_identity(std::size_t order) {
  require_positive_order(order, "check_phi_f_identity");
  const auto phi5_sq =
      in_power([](std::size_t n) { return pow(phi(kZZ, n), 2); }, 5, order);
  const auto lhs = pow(phi(kZZ, order), 2) - phi5_sq;
  const auto rhs = scale(shift(theta_f({3, 7}, kZZ, order) * theta_f({1, 9}, kZZ, order), 1), 4);
  return evaluate("phi-f", "phi(q)^2 - phi(q^5)^2 = 4q f(q^3,q^7) f(q,q^9)", order,
                  {{"phi-f", lhs, rhs}});
}

ProofStepResult check_frobenius_congruence(std::uint64_t k, std::uint64_t m, std::size_t order) {
  require_positive_order(order, "check_frobenius_congruence");
  if (k < 1) throw std::invalid_argument("check_frobenius_congruence: k must be positive");
  if (!is_prime(m)) {
    throw std::invalid_argument("check_frobenius_congruence: modulus " + std::to_string(m) +
                                " is not prime");
  }
  const auto ring = CoefficientRing::modulo(m);
  return evaluate("frobenius",
                  "(q^" + std::to_string(k) + ";q^" + std::to_string(k) + ")^" +
                      std::to_string(m) + " = (q^" + std::to_string(k * m) + ";q^" +
                      std::to_string(k * m) + ") mod " + std::to_string(m),
                  order,
                  {{"frobenius", pow(pochhammer(k, ring, order), m),
                    pochhammer(k * m, ring, order)}});
}

// ---------------------------------------------------------------------------
// Mod-5 replay of the proof that p_4(25n+20) = 0 (mod 5)

namespace {

const CoefficientRing kF5 = CoefficientRing::modulo(5);

// Shared inputs of the replay. Everything is immutable once built, so the
// steps may run concurrently.
struct ReplayContext {
  std::size_t order;       // working order after the first dissection
  std::size_t high_order;  // 5*order + 4, before it
  TruncatedSeries generating;      // 1/((q;q)(q^4;q^4)) mod 5 at high_order
  TruncatedSeries oracle;          // p_4(n) mod 5 from the partition table
  TruncatedSeries fifths;          // sum p_4(5n) q^n
  TruncatedSeries b_series;        // sum (-1)^n p_4(5n) q^n
  TruncatedSeries b_oracle;        // same, directly from the table

  TruncatedSeries eta(std::uint64_t k, std::size_t at) const { return pochhammer(k, kF5, at); }
  TruncatedSeries eta(std::uint64_t k) const { return eta(k, order); }
  TruncatedSeries phi_at(std::size_t at) const { return phi(kF5, at); }
  TruncatedSeries phi_of_power(std::size_t k, std::size_t at) const {
    return in_power([](std::size_t n) { return phi(kF5, n); }, k, at);
  }
  TruncatedSeries theta(std::uint64_t u, std::uint64_t v, std::size_t at) const {
    return theta_f({u, v}, kF5, at);
  }
};

ReplayContext make_context(std::size_t order) {
  ReplayContext ctx;
  ctx.order = order;
  ctx.high_order = 5 * order + 4;
  ctx.generating = invert(ctx.eta(1, ctx.high_order) * ctx.eta(4, ctx.high_order));

  const PartitionTable table = two_color_table(4, ctx.high_order);
  ctx.oracle = TruncatedSeries{kF5, table.values};

  ctx.fifths = dissect(ctx.generating, 5, 0);
  ctx.b_series = negate_variable(ctx.fifths);

  std::vector<BigInt> signed_values(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    signed_values[n] = n % 2 == 0 ? table.values[5 * n] : BigInt{-table.values[5 * n]};
  }
  ctx.b_oracle = reduce_mod(TruncatedSeries{kZZ, std::move(signed_values)}, 5);
  return ctx;
}

// (q^5;q^5)(q^20;q^20) / (q^10;q^10)^3 at the given order.
TruncatedSeries leading_factor(const ReplayContext& c, std::size_t at) {
  return c.eta(5, at) * c.eta(20, at) * invert(pow(c.eta(10, at), 3));
}

// phi(q)^3 with phi(q) replaced by its 5-dissection, before extraction.
TruncatedSeries cubed_dissection(const ReplayContext& c) {
  const std::size_t h = c.high_order;
  const auto three_terms = c.phi_of_power(25, h) + scale(shift(c.theta(15, 35, h), 1), 2) +
                           scale(shift(c.theta(5, 45, h), 4), 2);
  return leading_factor(c, h) * pow(three_terms, 3);
}

TruncatedSeries extracted_terms(const ReplayContext& c) {
  const std::size_t h = c.high_order;
  const auto phi25 = c.phi_of_power(25, h);
  const auto cross = scale(shift(c.theta(15, 35, h) * c.theta(5, 45, h), 5), 4);
  return leading_factor(c, h) * phi25 * (pow(phi25, 2) + cross);
}

// Double sum of (-1)^(r+s) (2r+1)(2s+1) q^(r(r+1)/2 + s(s+1)), enumerated
// term by term.
TruncatedSeries jacobi_double_sum(std::size_t order) {
  std::vector<BigInt> c(order + 1);
  for (std::size_t r = 0; r * (r + 1) / 2 <= order; ++r) {
    for (std::size_t s = 0; r * (r + 1) / 2 + s * (s + 1) <= order; ++s) {
      const long term = static_cast<long>((2 * r + 1) * (2 * s + 1));
      c[r * (r + 1) / 2 + s * (s + 1)] += (r + s) % 2 == 0 ? term : -term;
    }
  }
  return TruncatedSeries{kF5, std::move(c)};
}

using StepFn = ProofStepResult (*)(const ReplayContext&);

ProofStepResult step_generating_function(const ReplayContext& c) {
  return evaluate("s1", "1/((q;q)(q^4;q^4)) has coefficients p_4(n) (partition oracle)",
                  c.high_order, {{"series vs oracle", c.generating, c.oracle}});
}

ProofStepResult step_binomial(const ReplayContext& c) {
  const std::size_t h = c.high_order;
  const auto phi_cubed = pow(c.phi_at(h), 3);
  const auto exact_form = pow(c.eta(1, h), 5) * pow(c.eta(4, h), 5) *
                          invert(pow(c.eta(2, h), 15)) * phi_cubed;
  return evaluate("s2",
                  "sum p_4(n) q^n = (q^5;q^5)(q^20;q^20)/(q^10;q^10)^3 phi(q)^3 after "
                  "reducing fifth powers",
                  h,
                  {{"reduced form", c.generating, leading_factor(c, h) * phi_cubed},
                   {"multiply-divide form", c.generating, exact_form}});
}

ProofStepResult step_extract(const ReplayContext& c) {
  const auto extracted = dissect(extracted_terms(c), 5, 0);
  return evaluate("s3",
                  "multiples of 5 in the expanded cube are phi(q^25)(phi(q^25)^2 + "
                  "4q^5 f(q^15,q^35) f(q^5,q^45))",
                  c.order,
                  {{"cube extraction", dissect(cubed_dissection(c), 5, 0), extracted},
                   {"generating function", c.fifths, extracted}});
}

// (q;q)(q^4;q^4)/(q^2;q^2)^3 at the working order.
TruncatedSeries rescaled_factor(const ReplayContext& c) {
  return c.eta(1) * c.eta(4) * invert(pow(c.eta(2), 3));
}

TruncatedSeries phi_f_side(const ReplayContext& c) {
  const std::size_t n = c.order;
  return pow(c.phi_of_power(5, n), 2) +
         scale(shift(c.theta(3, 7, n) * c.theta(1, 9, n), 1), 4);
}

ProofStepResult step_rescale(const ReplayContext& c) {
  const auto rhs = rescaled_factor(c) * c.phi_of_power(5, c.order) * phi_f_side(c);
  return evaluate("s4",
                  "q^5 -> q: sum p_4(5n) q^n = (q;q)(q^4;q^4)/(q^2;q^2)^3 phi(q^5)"
                  "(phi(q^5)^2 + 4q f(q^3,q^7) f(q,q^9))",
                  c.order,
                  {{"rescaled form", c.fifths, rhs},
                   {"rescaling of s3", dissect(extracted_terms(c), 5, 0), rhs}});
}

ProofStepResult step_phi_squared(const ReplayContext& c) {
  const auto phi_sq = pow(c.phi_at(c.order), 2);
  const auto rhs = rescaled_factor(c) * c.phi_of_power(5, c.order) * phi_sq;
  return evaluate("s5",
                  "phi(q^5)^2 + 4q f(q^3,q^7) f(q,q^9) = phi(q)^2: sum p_4(5n) q^n = "
                  "(q;q)(q^4;q^4)/(q^2;q^2)^3 phi(q^5) phi(q)^2",
                  c.order,
                  {{"phi(q)^2 form", c.fifths, rhs}, {"phi-f identity", phi_f_side(c), phi_sq}});
}

ProofStepResult step_phi_squared_product(const ReplayContext& c) {
  const auto phi5 = c.phi_of_power(5, c.order);
  const auto p1 = c.eta(1), p2 = c.eta(2), p4 = c.eta(4);
  const auto substituted =
      phi5 * rescaled_factor(c) * pow(p2, 10) * invert(pow(p1, 4) * pow(p4, 4));
  const auto simplified = phi5 * pow(p2, 7) * invert(pow(p1, 3) * pow(p4, 3));
  return evaluate("s6",
                  "phi(q)^2 as (q^2;q^2)^10/((q;q)^4 (q^4;q^4)^4), simplified to "
                  "phi(q^5) (q^2;q^2)^7/((q;q)^3 (q^4;q^4)^3)",
                  c.order,
                  {{"simplified", c.fifths, simplified},
                   {"substituted", c.fifths, substituted},
                   {"simplification", substituted, simplified}});
}

TruncatedSeries squared_tail(const ReplayContext& c) {
  return pow(c.eta(1), 2) * pow(c.eta(2), 2) * pow(c.eta(4), 2);
}

ProofStepResult step_split_fifth_powers(const ReplayContext& c) {
  const auto p1 = c.eta(1), p2 = c.eta(2), p4 = c.eta(4);
  const auto rhs = c.phi_of_power(5, c.order) * pow(p2, 5) * invert(pow(p1, 5) * pow(p4, 5)) *
                   squared_tail(c);
  return evaluate("s7",
                  "factor out fifth powers: phi(q^5) (q^2;q^2)^5/((q;q)^5 (q^4;q^4)^5) "
                  "(q;q)^2 (q^2;q^2)^2 (q^4;q^4)^2",
                  c.order, {{"fifth powers", c.fifths, rhs}});
}

ProofStepResult step_frobenius_fifths(const ReplayContext& c) {
  const auto rhs = c.phi_of_power(5, c.order) * c.eta(10) * invert(c.eta(5) * c.eta(20)) *
                   squared_tail(c);
  return evaluate("s8",
                  "fifth powers reduced: phi(q^5) (q^10;q^10)/((q^5;q^5)(q^20;q^20)) "
                  "(q;q)^2 (q^2;q^2)^2 (q^4;q^4)^2",
                  c.order, {{"reduced fifth powers", c.fifths, rhs}});
}

// (q^10;q^10)^6 / ((q^5;q^5)^3 (q^20;q^20)^3)
TruncatedSeries phi5_eta_factor(const ReplayContext& c) {
  return pow(c.eta(10), 6) * invert(pow(c.eta(5), 3) * pow(c.eta(20), 3));
}

ProofStepResult step_phi5_product(const ReplayContext& c) {
  const auto rhs = phi5_eta_factor(c) * squared_tail(c);
  return evaluate("s9",
                  "phi(q^5) as an eta quotient: (q^10;q^10)^6/((q^5;q^5)^3 (q^20;q^20)^3) "
                  "(q;q)^2 (q^2;q^2)^2 (q^4;q^4)^2",
                  c.order, {{"eta quotient", c.fifths, rhs}});
}

TruncatedSeries odd_product(std::uint64_t offset, std::size_t order) {
  return pochhammer_progression(offset, 2 * offset, kF5, order);
}

ProofStepResult step_even_odd(const ReplayContext& c) {
  const auto q1 = odd_product(1, c.order);  // (q;q^2)
  const auto q5 = odd_product(5, c.order);  // (q^5;q^10)
  const auto rhs = pow(c.eta(10), 3) * invert(pow(q5, 3) * pow(c.eta(20), 3)) * pow(q1, 2) *
                   pow(c.eta(2), 4) * pow(c.eta(4), 2);
  return evaluate("s10",
                  "(q;q) = (q;q^2)(q^2;q^2), (q^5;q^5) = (q^5;q^10)(q^10;q^10): "
                  "(q^10;q^10)^3/((q^5;q^10)^3 (q^20;q^20)^3) (q;q^2)^2 (q^2;q^2)^4 "
                  "(q^4;q^4)^2",
                  c.order,
                  {{"split form", c.fifths, rhs},
                   {"(q;q) split", c.eta(1), q1 * c.eta(2)},
                   {"(q^5;q^5) split", c.eta(5), q5 * c.eta(10)}});
}

// (-q;q^2)_inf realised as (q^2;q^2)^2/((q;q)(q^4;q^4)), and its q^5 analogue.
TruncatedSeries negated_odd_product(const ReplayContext& c, std::uint64_t k) {
  return pow(c.eta(2 * k), 2) * invert(c.eta(k) * c.eta(4 * k));
}

ProofStepResult step_negate(const ReplayContext& c) {
  const auto m1 = negated_odd_product(c, 1);
  const auto m5 = negated_odd_product(c, 5);
  const auto rhs = pow(c.eta(10), 3) * invert(pow(m5, 3) * pow(c.eta(20), 3)) * pow(m1, 2) *
                   pow(c.eta(2), 4) * pow(c.eta(4), 2);
  return evaluate("s11",
                  "q -> -q: B(q) = (q^10;q^10)^3/((-q^5;q^10)^3 (q^20;q^20)^3) (-q;q^2)^2 "
                  "(q^2;q^2)^4 (q^4;q^4)^2",
                  c.order,
                  {{"negated form", c.b_series, rhs},
                   {"(-q;q^2) quotient", negate_variable(odd_product(1, c.order)), m1},
                   {"(-q^5;q^10) quotient", negate_variable(odd_product(5, c.order)), m5}});
}

ProofStepResult step_simple(const ReplayContext& c) {
  const std::size_t n = c.order;
  const auto p1 = c.eta(1), p2 = c.eta(2), p4 = c.eta(4), p5 = c.eta(5), p10 = c.eta(10),
             p20 = c.eta(20);
  const auto q1 = odd_product(1, n), q5 = odd_product(5, n);
  const auto q2 = pochhammer_progression(2, 4, kF5, n);    // (q^2;q^4)
  const auto q10 = pochhammer_progression(10, 20, kF5, n); // (q^10;q^20)

  const auto cleared = pow(q5, 3) * pow(p10, 3) * invert(pow(q10, 3) * pow(p20, 3)) *
                       pow(q2, 2) * pow(p2, 4) * pow(p4, 2) * invert(pow(q1, 2));
  const auto counted = pow(p5, 3) * invert(pow(p10, 3)) * pow(p2, 8) * invert(pow(p1, 2));
  const auto regrouped = pow(p5, 3) * invert(pow(p10, 3)) * pow(p2, 5) * invert(pow(p1, 5)) *
                         pow(p1, 3) * pow(p2, 3);
  const auto simple = pow(p5, 2) * invert(pow(p10, 2)) * pow(p1, 3) * pow(p2, 3);
  return evaluate("s12",
                  "B(q) = (q^5;q^5)^2/(q^10;q^10)^2 (q;q)^3 (q^2;q^2)^3",
                  n,
                  {{"reduced form", c.b_series, simple},
                   {"oracle B(q)", c.b_oracle, c.b_series},
                   {"cleared denominators", c.b_series, cleared},
                   {"power counting", c.b_series, counted},
                   {"regrouped", c.b_series, regrouped}});
}

ProofStepResult step_double_sum(const ReplayContext& c) {
  const std::size_t n = c.order;
  const auto sum = jacobi_double_sum(n);
  const auto rhs = pow(c.eta(5), 2) * invert(pow(c.eta(10), 2)) * sum;
  const auto jacobi_product =
      jacobi_cube(kF5, n) * substitute_power(jacobi_cube(kF5, n / 2), 2, n);
  return evaluate("s13",
                  "B(q) = (q^5;q^5)^2/(q^10;q^10)^2 sum_{r,s} (-1)^(r+s) (2r+1)(2s+1) "
                  "q^(r(r+1)/2 + s(s+1))",
                  n,
                  {{"double sum form", c.b_series, rhs},
                   {"product of Jacobi expansions", jacobi_product, sum},
                   {"(q;q)^3 (q^2;q^2)^3", pow(c.eta(1), 3) * pow(c.eta(2), 3), sum}});
}

ProofStepResult step_final(const ReplayContext& c) {
  const std::size_t n = c.order;
  const std::size_t final_order = (n - 4) / 5;
  const TruncatedSeries zero{kF5, final_order};
  const auto sum = jacobi_double_sum(n);
  const auto rhs = pow(c.eta(5), 2) * invert(pow(c.eta(10), 2)) * sum;
  return evaluate("s14",
                  "terms q^(5n+4) of B(q) vanish: p_4(25n+20) = 0 mod 5", final_order,
                  {{"B(q) at 5n+4", dissect(c.b_series, 5, 4), zero},
                   {"double sum at 5n+4", dissect(sum, 5, 4), zero},
                   {"double sum form at 5n+4", dissect(rhs, 5, 4), zero},
                   {"oracle B(q) at 5n+4", dissect(c.b_oracle, 5, 4), zero}});
}

constexpr StepFn kSteps[kReplaySteps] = {
    step_generating_function, step_binomial,         step_extract,
    step_rescale,             step_phi_squared,      step_phi_squared_product,
    step_split_fifth_powers,  step_frobenius_fifths, step_phi5_product,
    step_even_odd,            step_negate,           step_simple,
    step_double_sum,          step_final,
};

}  // namespace

std::vector<ProofStepResult> replay_k4_proof(std::size_t order, ReplayOptions options) {
  if (order < kReplayMinOrder) {
    throw OrderTooSmall("s14", "order too small: " + std::to_string(order) +
                                   " < " + std::to_string(kReplayMinOrder) +
                                   ", needed by step s14 (final extraction)");
  }
  const ReplayContext ctx = make_context(order);

  std::vector<ProofStepResult> results;
  results.reserve(kReplaySteps);
  if (options.parallel) {
    std::vector<std::future<ProofStepResult>> pending;
    for (const StepFn step : kSteps) {
      pending.push_back(std::async(std::launch::async, step, std::cref(ctx)));
    }
    for (auto& f : pending) results.push_back(f.get());
    if (options.halt_on_failure) {
      for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i].passed) {
          results.resize(i + 1);
          break;
        }
      }
    }
    return results;
  }
  for (const StepFn step : kSteps) {
    results.push_back(step(ctx));
    if (options.halt_on_failure && !results.back().passed) break;
  }
  return results;
}

}  // namespace qseries
