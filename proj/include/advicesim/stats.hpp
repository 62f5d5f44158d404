#pragma once

#include <cstdint>

namespace advicesim {

// All logarithms are natural; sample counts are rounded up.

struct ConfidenceSpec {
  double epsilon;  // additive accuracy, in (0, 1)
  double delta;    // failure probability, in (0, 1)
};

/// Hoeffding budget: ceil(ln(2/delta) / (2 epsilon^2)).
std::int64_t hoeffding_samples(const ConfidenceSpec& spec);

/// Per-event failure budget under the union bound.
double union_split(double delta_total, std::int64_t events);

/// P(|Z - E Z| >= K sigma) <= 1/K^2.
double chebyshev_tail(double k);

struct DenseBudgetChain {
  std::int64_t n_exact;  // ceil((50/p0^2) ln(6q))
  double n_mid;          // 200 q^2 ln(6q)
  double n_cap;          // 1200 q^3
};

/// Budget chain for the dense codec: n_exact <= n_mid <= n_cap.
/// p0 must be the reciprocal of an integer in [q, 2q], as produced by
/// the dense encoder (p0 = 1/(q + w)); the chain inequalities are then
/// verified exactly on integers.
DenseBudgetChain dense_budget_chain(std::int64_t q, double p0);

struct BinomialInterval {
  double lo;
  double hi;
};

/// Wilson score interval for a binomial proportion (default 95%).
BinomialInterval wilson_interval(std::int64_t successes, std::int64_t trials,
                                 double z = 1.959963984540054);

}  // namespace advicesim
