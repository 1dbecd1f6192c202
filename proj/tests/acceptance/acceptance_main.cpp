// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "qseries/congruence.hpp"
#include "qseries/identities.hpp"
#include "qseries/partitions.hpp"
#include "qseries/special_functions.hpp"

using namespace qseries;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.ok = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (outcome.ok && limit_seconds > 0 && seconds > limit_seconds) {
    outcome.ok = false;
    outcome.detail = "took " + std::to_string(seconds) + " s, limit " +
                     std::to_string(limit_seconds) + " s";
  }
  if (!outcome.ok) ++failures;
  std::printf("%s  %2d  %-46s %8.3f s%s%s\n", outcome.ok ? "PASS" : "FAIL", id, title.c_str(),
              seconds, outcome.detail.empty() ? "" : "  ", outcome.detail.c_str());
  std::fflush(stdout);
}

void characterization(Outcome& o) {
  const std::set<std::uint64_t> holds{1, 2, 3, 4, 5, 7, 8, 10, 15, 17, 20};
  const std::vector<long> values{487, 187, 103, 78, 56, 42, 22, 11, 7, 3, 2, 1, 1};
  const auto reports = characterize_all(8);
  o.require(reports.size() == 24, "expected 24 reports");
  std::size_t next = 0;
  for (const auto& r : reports) {
    const std::string tag = "k = " + std::to_string(r.k);
    if (holds.count(r.k)) {
      o.require(r.holds() && r.bound == 8, tag + " should hold");
      continue;
    }
    o.require(r.verdict == Verdict::Fails && r.counterexample.has_value(), tag + " should fail");
    if (!r.counterexample) continue;
    o.require(r.counterexample->n == 0, tag + " should fail at n = 0");
    o.require(next < values.size() && r.counterexample->value == values[next],
              tag + " counterexample value");
    ++next;
  }
  o.require(next == values.size(), "expected 13 failures");
}

void replay(Outcome& o) {
  const auto steps = replay_k4_proof(300);
  o.require(steps.size() == kReplaySteps, "expected 14 steps");
  for (const auto& s : steps) o.require(s.passed, s.step_id + " failed at " + s.failed_check);
  if (steps.empty()) return;
  const auto& last = steps.back();
  o.require(last.order >= 59, "final order " + std::to_string(last.order) + " < 59");
  o.require(last.lhs.is_zero() && last.lhs.order() == last.order, "final series not zero");
}

void residues(Outcome& o) {
  const auto a = residue_analysis(5, 4);
  o.require(a.triangular_residues == std::vector<std::uint64_t>{0, 1, 3}, "triangular set");
  o.require(a.double_triangular_residues == std::vector<std::uint64_t>{0, 1, 2},
            "double-triangular set");
  o.require(a.witness_classes.size() == 1, "witness not unique");
  if (a.witness_classes.size() == 1) {
    const auto& w = a.witness_classes.front();
    o.require(w.r == 2 && w.s == 2 && w.coefficient_residue == 0, "witness (2, 2) residue 0");
  }
}

void oracle_equivalence(Outcome& o) {
  const std::size_t order = 500;
  const auto ring = CoefficientRing::exact();
  const auto base = partition_table(order);
  const auto p1 = pochhammer(1, ring, order);
  for (std::uint64_t k = 1; k <= 24; ++k) {
    const auto series = invert(p1 * pochhammer(k, ring, order));
    const auto table = two_color_table(base, k, order);
    o.require(series.exact_coeffs() == table.values, "k = " + std::to_string(k));
  }
}

void chan_toh(Outcome& o) {
  const struct {
    unsigned alpha;
    std::uint64_t bound, modulus, delta;
  } cases[] = {{2, 100, 5, 22}, {3, 40, 5, 47}, {4, 10, 25, 547}};
  for (const auto& c : cases) {
    const auto r = verify_chan_toh(c.alpha, c.bound);
    const std::string tag = "alpha = " + std::to_string(c.alpha);
    o.require(r.holds(), tag + " fails");
    o.require(r.modulus == c.modulus, tag + " modulus");
    o.require(delta_alpha(c.alpha) == c.delta && r.progression.offset == c.delta, tag + " delta");
  }
}

// Randomized algebra checks, alternating between ZZ and Z/m.
void algebra(Outcome& o) {
  constexpr int kCases = 200;
  std::mt19937_64 rng(20261014);
  const std::vector<std::uint64_t> moduli{2, 5, 7, 25, 97};
  auto ring_for = [&](int i) {
    return i % 2 == 0 ? CoefficientRing::exact()
                      : CoefficientRing::modulo(moduli[rng() % moduli.size()]);
  };
  auto random_in = [&](const CoefficientRing& ring, std::size_t order, bool unit) {
    auto s = testing::random_series(rng, order, unit);
    return ring.is_exact() ? s : reduce_mod(s, ring.modulus());
  };
  auto order_of = [&] { return static_cast<std::size_t>(rng() % 65); };

  int axioms = 0, inverses = 0, dissections = 0, involutions = 0, homomorphisms = 0;
  for (int i = 0; i < kCases; ++i) {
    const auto ring = ring_for(i);
    const auto a = random_in(ring, order_of(), false);
    const auto b = random_in(ring, order_of(), false);
    const auto c = random_in(ring, order_of(), false);
    const auto zero = TruncatedSeries(ring, 64);
    const auto one = TruncatedSeries::one(ring, 64);
    bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) &&
              a * b == b * a && a * (b + c) == a * b + a * c && a + zero == a &&
              a * one == a && a - a == TruncatedSeries(ring, a.order());
    o.require(ok, "ring axioms, case " + std::to_string(i));
    axioms += ok;

    const auto u = random_in(ring, order_of(), true);
    ok = u * invert(u) == TruncatedSeries::one(ring, u.order());
    o.require(ok, "invert round-trip, case " + std::to_string(i));
    inverses += ok;

    const std::size_t m = 1 + rng() % 7;
    std::vector<BigInt> coeffs(a.order() + 1);
    for (std::size_t r = 0; r < m && r <= a.order(); ++r) {
      const auto part = dissect(a, m, r);
      for (std::size_t j = 0; j <= part.order(); ++j) coeffs[m * j + r] = part.coeff(j);
    }
    const TruncatedSeries rebuilt(ring, coeffs);
    ok = rebuilt == a;
    o.require(ok, "dissection reassembly, case " + std::to_string(i));
    dissections += ok;

    ok = negate_variable(negate_variable(a)) == a &&
         negate_variable(a * b) == negate_variable(a) * negate_variable(b);
    o.require(ok, "negate_variable involution, case " + std::to_string(i));
    involutions += ok;

    const auto x = testing::random_series(rng, order_of());
    const auto y = testing::random_series(rng, order_of());
    const std::uint64_t mod = moduli[rng() % moduli.size()];
    ok = reduce_mod(x + y, mod) == reduce_mod(x, mod) + reduce_mod(y, mod) &&
         reduce_mod(x * y, mod) == reduce_mod(x, mod) * reduce_mod(y, mod);
    o.require(ok, "reduce_mod homomorphism, case " + std::to_string(i));
    homomorphisms += ok;
  }
  o.require(axioms >= 100 && inverses >= 100 && dissections >= 100 && involutions >= 100 &&
                homomorphisms >= 100,
            "fewer than 100 passing cases in a group");
}

}  // namespace

int main() {
  criterion(1, "characterization table, bound 8", 1.0, characterization);
  criterion(2, "verify_family(4, 400)", 5.0, [](Outcome& o) {
    const auto r = verify_family(4, 400);
    o.require(r.holds() && r.bound == 400, "p_4(25n+20) not 0 mod 5");
  });
  criterion(3, "verify_strong_5ell(l, 200), l = 1..4", 5.0, [](Outcome& o) {
    for (std::uint64_t ell = 1; ell <= 4; ++ell) {
      o.require(verify_strong_5ell(ell, 200).holds(), "l = " + std::to_string(ell));
    }
  });
  criterion(4, "check_beauty_identity(200)", 2.0, [](Outcome& o) {
    o.require(check_beauty_identity(200).passed, "mismatch");
  });
  criterion(5, "jacobi, phi product, phi 5-dissection, phi-f", 5.0, [](Outcome& o) {
    o.require(check_jacobi(500).passed, "jacobi(500)");
    o.require(check_phi_product(300).passed, "phi_product(300)");
    o.require(check_phi_5dissection(400).passed, "phi_5dissection(400)");
    o.require(check_phi_f_identity(400).passed, "phi_f(400)");
  });
  criterion(6, "frobenius mod 5, k = 1, 2, 4, order 300", 2.0, [](Outcome& o) {
    for (std::uint64_t k : {1, 2, 4}) {
      o.require(check_frobenius_congruence(k, 5, 300).passed, "k = " + std::to_string(k));
    }
  });
  criterion(7, "replay_k4_proof(300)", 10.0, replay);
  criterion(8, "residue_analysis(5, 4)", 0.0, residues);
  criterion(9, "invert((q;q)(q^k;q^k)) = p_k table, N = 500", 10.0, oracle_equivalence);
  criterion(10, "chan-toh alpha = 2, 3, 4", 10.0, chan_toh);
  criterion(11, "algebra properties, order <= 64", 0.0, algebra);
  std::printf("%s: %d failed\n", failures == 0 ? "ok" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
